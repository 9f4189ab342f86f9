/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "llwb/calculus/prove.hpp"
#include "llwb/core/syntax.hpp"

namespace llwb {

/* Provability grid of a sequent A |- B in the additive fragment.
 *
 * Rows are the subformula occurrences of A and columns those of B, both in
 * preorder (index 0 is the root). A link (i, j) records that row i entails
 * column j. Either side may also be the empty cedent, written `epsilon`;
 * those links carry the unit rules (1 on the left, bot on the right). */
class Grid {
public:
	static constexpr std::size_t epsilon = static_cast<std::size_t>(-1);
	using Link = std::pair<std::size_t, std::size_t>;

	/* Throws FragmentError unless both sides are in the additive fragment. */
	Grid(std::optional<Formula> left, std::optional<Formula> right);

	const std::optional<Formula> &left() const { return left_; }
	const std::optional<Formula> &right() const { return right_; }
	const std::vector<Formula> &rows() const { return rows_; }
	const std::vector<Formula> &cols() const { return cols_; }

	/* Children of an occurrence (empty for leaves and for epsilon). */
	const std::vector<std::size_t> &row_children(std::size_t i) const;
	const std::vector<std::size_t> &col_children(std::size_t j) const;

	/* Row/column indices with epsilon first and every child before its
	 * parent; a single sweep in this order reaches the fixed point. */
	std::vector<std::size_t> row_order() const;
	std::vector<std::size_t> col_order() const;

	Link root() const;

	std::set<Link> links;

private:
	std::optional<Formula> left_, right_;
	std::vector<Formula> rows_, cols_;
	std::vector<std::vector<std::size_t>> row_kids_, col_kids_;
};

/* Axiom links between equal literals; no other links. */
Grid build_grid(const Formula &a, const Formula &b);

enum class GridRule {
	Axiom,     // p |- p
	PlusRight, // A -> B or A -> C gives A -> B + C
	WithRight, // A -> B and A -> C gives A -> B & C
	PlusLeft,  // A -> C and B -> C gives A + B -> C
	WithLeft,  // A -> C or B -> C gives A & B -> C
	Top,       // anything -> top
	Zero,      // 0 -> anything
	OneRight,  // epsilon -> 1
	OneLeft,   // epsilon -> B gives 1 -> B
	BotLeft,   // bot -> epsilon
	BotRight,  // A -> epsilon gives A -> bot
};

std::string to_string(GridRule r);

struct GridStep {
	Grid::Link link;
	GridRule rule;
	std::vector<Grid::Link> premises;
};

struct ClosureStats {
	std::size_t inspections = 0; // premise lookups
	std::size_t passes = 0;
};

/* Least fixed point by naive iteration: sweep all cells (in reverse order,
 * the least favourable one) until nothing changes. */
Grid closure(const Grid &g, ClosureStats *stats = nullptr);

/* The same fixed point in one sweep in subformula order. `steps` receives
 * one justification per added link, premises first. */
Grid closure_sweep(const Grid &g, ClosureStats *stats = nullptr, std::vector<GridStep> *steps = nullptr);

struct AllResult {
	Verdict verdict = Verdict::NotProvable;
	/* Derivation of the root link (premises before conclusions). */
	std::vector<GridStep> derivation;
	ClosureStats stats;
};

AllResult decide_all(const Formula &a, const Formula &b);

/* Single-formula (or empty) two-sided sequents; throws std::invalid_argument
 * for more than one formula on either side. */
AllResult decide_all(const TwoSidedSequent &s);

/* Replays a derivation against the axiom links of `g`: every step must
 * follow from earlier steps or axioms by its rule, and the last step must
 * be the root link. */
bool check_grid_derivation(const Grid &g, const std::vector<GridStep> &derivation, std::string *why = nullptr);

std::string grid_to_dot(const Grid &g);

} // namespace llwb
