# Bumped whenever a change alters computed tables; the cache keys on it.
ENGINE_VERSION = "1.0.0"
