"""IxG tests."""