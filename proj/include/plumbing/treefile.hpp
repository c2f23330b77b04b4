#pragma once

#include <string>

#include "plumbing/form.hpp"

namespace plumbing {

/// Parses the plain-text tree file format:
///
///   # comment
///   tree <name>
///   vertex <label> color=<B|W> f=<int>
///   edge <label> <label> eps=<+1|-1>
///
/// Matching and orientation are derived on load, never stored. Syntax
/// problems raise ParseError with 1-based line/column; semantic problems
/// (not a tree, bad colors, no matching) surface from tree validation.
FramedPlumbing parse_tree_file(const std::string& text);

/// Reads the file at `path` and parses it.
FramedPlumbing parse_tree_file_at(const std::string& path);

/// Deterministic inverse of parse_tree_file: vertices in canonical order,
/// edges in canonical edge order, lower-position endpoint first.
std::string serialize(const FramedPlumbing& fp);

/// Graphviz export following the drawing conventions: B vertices filled,
/// W vertices hollow, matched edges drawn with a doubled stroke, every edge
/// directed along the orientation.
std::string export_dot(const FramedPlumbing& fp);

} // namespace plumbing
