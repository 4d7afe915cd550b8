"""Test suite for Kubani."""
