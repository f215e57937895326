"""
Provider interfaces + factory.

Storage backs the census cache; jobs fan census shards out to workers.
"""
