"""IxG sample projects."""
