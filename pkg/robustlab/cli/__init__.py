"""Command-line surface: eval, check, learn and casestudy sub-commands"""
