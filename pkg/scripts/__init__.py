"""Command-line scripts for bolkit."""
