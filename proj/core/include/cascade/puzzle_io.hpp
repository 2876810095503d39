#pragma once

#include <filesystem>
#include <string>

#include "cascade/puzzle.hpp"

namespace cascade {

/// Puzzle JSON: {"rows": R, "cells": [[value-or-null per row, top first]],
/// "vmax": int, "requires_subtraction": bool}. null is a blank cell, a
/// number a given one.
std::string puzzle_to_json(const Puzzle& puzzle);

/// Parses and validates the format above. Throws ConfigError on malformed
/// content, naming the offending field.
Puzzle puzzle_from_json(const std::string& text);

/// File variants. load throws IoError when the file cannot be read and
/// ConfigError when its content is invalid; save throws IoError.
Puzzle load_puzzle(const std::filesystem::path& path);
void save_puzzle(const Puzzle& puzzle, const std::filesystem::path& path);

}  // namespace cascade
