"""Configuration limits and the named graph catalog"""
