"""Unit tests for presentation layer."""
