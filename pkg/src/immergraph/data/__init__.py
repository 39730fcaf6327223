"""Packaged data files: the obstruction catalog and graph lists."""
