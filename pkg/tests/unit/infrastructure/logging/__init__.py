"""Unit tests for logging infrastructure."""
