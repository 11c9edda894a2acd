//! SVG rendering (placeholder while lower layers build).
