"""Command-line front end: subcommands, certificates and settings presets."""
