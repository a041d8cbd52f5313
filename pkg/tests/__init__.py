"""
EckartNU Test Suite

Individual test scripts for the services, the oracle and the CLI.
Run each test independently or all of them through test_all.py.
"""
