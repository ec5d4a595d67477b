"""Unit tests for application query handlers."""
