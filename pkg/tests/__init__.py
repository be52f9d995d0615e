"""
Tests para ZeroLocus
"""
