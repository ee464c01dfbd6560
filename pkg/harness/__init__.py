'''
Command-line harness: run records, benchmark protocol and sub-commands
'''
