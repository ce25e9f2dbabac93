# The modules in test_netCommands hold test methods (taking ``self``) that
# tests/test_cli.py attaches to CliTest; they are run from there, not collected
# on their own.
collect_ignore = ["test_netCommands"]
