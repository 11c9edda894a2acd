//! Instance documents (placeholder while lower layers build).
