# Tools for the membership pipeline
