"""Domain services tests module."""
