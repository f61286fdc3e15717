"""Exact sphere sizes, bounds and witness codes for homopolymer-free q-ary codes."""
