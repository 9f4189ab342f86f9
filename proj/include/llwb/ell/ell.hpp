/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "llwb/calculus/prove.hpp"
#include "llwb/core/sequent.hpp"

namespace llwb {

/* A finite, possibly empty, word over the exponentials, outermost first:
 * the word "!?" applied to p is !?p. */
class ModalityWord {
public:
	ModalityWord() = default;
	explicit ModalityWord(std::vector<Modality> symbols) : symbols_(std::move(symbols)) {}

	/* Accepts only the characters '!' and '?'; throws std::invalid_argument. */
	static ModalityWord parse(std::string_view text);

	const std::vector<Modality> &symbols() const { return symbols_; }
	std::size_t size() const { return symbols_.size(); }
	bool empty() const { return symbols_.empty(); }

	Formula apply(const Formula &body) const;
	/* Pointwise swap of ! and ?. */
	ModalityWord dual() const;
	std::string print() const;

	friend bool operator==(const ModalityWord &, const ModalityWord &) = default;

private:
	std::vector<Modality> symbols_;
};

enum class CanonicalModality {
	Epsilon,
	OfCourse,           // !
	WhyNot,             // ?
	OfCourseWhyNot,     // !?
	WhyNotOfCourse,     // ?!
	OfCourseWhyNotOfCourse, // !?!
	WhyNotOfCourseWhyNot,   // ?!?
};

inline constexpr std::array<CanonicalModality, 7> all_canonical_modalities = {
	CanonicalModality::Epsilon,        CanonicalModality::OfCourse,
	CanonicalModality::WhyNot,         CanonicalModality::OfCourseWhyNot,
	CanonicalModality::WhyNotOfCourse, CanonicalModality::OfCourseWhyNotOfCourse,
	CanonicalModality::WhyNotOfCourseWhyNot,
};

/* "", "!", "?", "!?", "?!", "!?!", "?!?" */
std::string_view to_string(CanonicalModality m);
ModalityWord word_of(CanonicalModality m);
CanonicalModality dual(CanonicalModality m);

/* Rewrites !! -> !, ?? -> ?, !?!? -> !?, ?!?! -> ?! leftmost-first until no
 * rule applies. `steps`, when given, is incremented once per rewrite and
 * once per symbol inspected while looking for a redex. */
CanonicalModality canonicalize(const ModalityWord &m, std::size_t *steps = nullptr);

/* Order of the seven classes: the reflexive-transitive closure of
 * ! <= eps, ! <= !?!, eps <= ?, !?! <= !?, !?! <= ?!, !? <= ?!?, ?! <= ?!?
 * and ?!? <= ?. */
bool modality_leq(CanonicalModality m, CanonicalModality n);

/* A formula of the shape mu L with L a literal. */
struct ModalizedLiteral {
	ModalityWord modality;
	Formula literal;
};

/* Throws FragmentError for anything other than a modalized literal. */
ModalizedLiteral decompose(const Formula &f);

enum class EllMode { Literal, Extended };

struct EllResult {
	/* Provable or NotProvable; the procedure never gives up. */
	Verdict verdict = Verdict::NotProvable;
	/* Symbol inspections, rewrites and pair comparisons. */
	std::size_t steps = 0;
};

/* Literal mode canonicalizes every modality, deletes exact dual pairs
 * (leftmost formula first, then its leftmost partner) and accepts iff
 * nothing is left. Extended mode runs the same exact pass, then a second
 * pass deleting (mu A, nu A^) whenever dual(mu) <= nu, then drops
 * leftovers whose modality starts with ?. Its greedy second pass makes
 * the verdict depend on the order of the sequent.
 * Literal acceptances are not backed by a proof tree, which is why this
 * returns a bare verdict. */
EllResult decide_ell(const Sequent &s, EllMode mode = EllMode::Literal);

/* One line of the discrepancy report. */
nlohmann::json ell_discrepancy(const Sequent &s, Verdict literal, Verdict oracle);

} // namespace llwb
