/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "llwb/core/sequent.hpp"

namespace llwb {

class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &msg, std::size_t line, std::size_t column);
	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_, column_;
};

/* ASCII syntax:
 *   atoms    [a-z][a-z0-9_]*   (except the keywords top, bot)
 *   units    1 0 top bot
 *   A^       negation, postfix, binds tightest
 *   !A ?A    prefix modalities
 *   A * B    tensor      A & B   with   (same level, left-assoc, no mixing)
 *   A + B    plus        A | B   par    (same level, lower, no mixing)
 *   A -o B   A +> B      implications, right-assoc, lowest
 * Sequents: "|- A, B" or "A, B |- C". */
Formula parse_formula(std::string_view text);
TwoSidedSequent parse_sequent(std::string_view text);

/* Parses either form and normalizes to one side. */
Sequent parse_one_sided(std::string_view text);

std::string print(const Formula &f);
std::string print(const Sequent &s);
std::string print(const TwoSidedSequent &s);

} // namespace llwb
