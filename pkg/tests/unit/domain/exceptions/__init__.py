"""Domain exceptions tests module."""
