//! Python bindings (populated as core modules land).
