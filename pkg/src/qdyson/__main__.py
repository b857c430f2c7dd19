from .ctharness.cli import entry

entry()
