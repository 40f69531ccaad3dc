"""Bundled disk-graph instances, loaded with `graphs.instances.load_bundled_instance`."""
