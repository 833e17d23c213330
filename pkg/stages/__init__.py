"""Node functions and state of the membership pipeline"""
