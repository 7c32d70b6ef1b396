"""
Tests package for the genext engine.
"""
