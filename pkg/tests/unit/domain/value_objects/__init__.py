"""Unit tests for domain value objects."""
