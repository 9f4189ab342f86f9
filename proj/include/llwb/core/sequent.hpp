/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "llwb/core/formula.hpp"

namespace llwb {

/* One-sided sequent |- A1, ..., An.
 *
 * Formulas keep their insertion order so that occurrence indices (used as
 * principal positions by proof certificates) survive printing and parsing,
 * but equality is multiset equality. */
class Sequent {
public:
	Sequent() = default;
	Sequent(std::initializer_list<Formula> fs) : formulas_(fs) {}
	explicit Sequent(std::vector<Formula> fs) : formulas_(std::move(fs)) {}

	const std::vector<Formula> &formulas() const { return formulas_; }
	std::size_t size() const { return formulas_.size(); }
	bool empty() const { return formulas_.empty(); }
	const Formula &operator[](std::size_t i) const { return formulas_[i]; }
	auto begin() const { return formulas_.begin(); }
	auto end() const { return formulas_.end(); }

	void push_back(Formula f) { formulas_.push_back(std::move(f)); }

	/* Copy with the occurrence at `i` removed. */
	Sequent without(std::size_t i) const;

	/* Formulas in canonical (sorted) order. */
	std::vector<Formula> sorted() const;

	/* Sum of formula sizes. */
	std::size_t total_size() const;

	friend bool operator==(const Sequent &a, const Sequent &b);

private:
	std::vector<Formula> formulas_;
};

/* Two-sided sequent A1, ..., An |- B1, ..., Bm. */
struct TwoSidedSequent {
	std::vector<Formula> antecedent;
	std::vector<Formula> succedent;

	friend bool operator==(const TwoSidedSequent &a, const TwoSidedSequent &b);
};

/* |- negate(A1), ..., negate(An), B1, ..., Bm */
Sequent normalize_two_sided(const TwoSidedSequent &s);

} // namespace llwb
