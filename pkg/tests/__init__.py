"""Test suite for BeyondU Data Engine."""
