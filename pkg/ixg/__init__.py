"""IxG: planning over graphs of convex sets by interleaved search."""
