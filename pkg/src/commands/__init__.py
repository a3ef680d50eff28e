"""
Command handlers behind the kdyck CLI
"""
