"""IxG protocols."""
