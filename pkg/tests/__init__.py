"""
Tests for the graph quasivariety toolkit
"""
