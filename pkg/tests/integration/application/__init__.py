"""Integration tests for application layer."""
