"""rydblock utility library: one vertical slice per concern, plus shared plumbing."""
