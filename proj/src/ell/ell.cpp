/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/ell/ell.hpp"

#include <stdexcept>

#include "llwb/core/fragment.hpp"
#include "llwb/core/syntax.hpp"

namespace llwb {

ModalityWord ModalityWord::parse(std::string_view text)
{
	std::vector<Modality> out;
	for (char c : text) {
		if (c == '!')
			out.push_back(Modality::OfCourse);
		else if (c == '?')
			out.push_back(Modality::WhyNot);
		else
			throw std::invalid_argument("modality words use only '!' and '?'");
	}
	return ModalityWord(std::move(out));
}

Formula ModalityWord::apply(const Formula &body) const
{
	Formula f = body;
	for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it)
		f = Formula::modal(*it, f);
	return f;
}

ModalityWord ModalityWord::dual() const
{
	std::vector<Modality> out;
	out.reserve(symbols_.size());
	for (Modality m : symbols_)
		out.push_back(llwb::dual(m));
	return ModalityWord(std::move(out));
}

std::string ModalityWord::print() const
{
	std::string s;
	for (Modality m : symbols_)
		s += m == Modality::OfCourse ? '!' : '?';
	return s;
}

std::string_view to_string(CanonicalModality m)
{
	switch (m) {
	case CanonicalModality::Epsilon: return "";
	case CanonicalModality::OfCourse: return "!";
	case CanonicalModality::WhyNot: return "?";
	case CanonicalModality::OfCourseWhyNot: return "!?";
	case CanonicalModality::WhyNotOfCourse: return "?!";
	case CanonicalModality::OfCourseWhyNotOfCourse: return "!?!";
	case CanonicalModality::WhyNotOfCourseWhyNot: return "?!?";
	}
	return "";
}

ModalityWord word_of(CanonicalModality m)
{
	return ModalityWord::parse(to_string(m));
}

CanonicalModality dual(CanonicalModality m)
{
	switch (m) {
	case CanonicalModality::Epsilon: return m;
	case CanonicalModality::OfCourse: return CanonicalModality::WhyNot;
	case CanonicalModality::WhyNot: return CanonicalModality::OfCourse;
	case CanonicalModality::OfCourseWhyNot: return CanonicalModality::WhyNotOfCourse;
	case CanonicalModality::WhyNotOfCourse: return CanonicalModality::OfCourseWhyNot;
	case CanonicalModality::OfCourseWhyNotOfCourse: return CanonicalModality::WhyNotOfCourseWhyNot;
	case CanonicalModality::WhyNotOfCourseWhyNot: return CanonicalModality::OfCourseWhyNotOfCourse;
	}
	return m;
}

CanonicalModality canonicalize(const ModalityWord &m, std::size_t *steps)
{
	std::size_t local = 0;
	std::size_t &count = steps ? *steps : local;
	std::vector<Modality> w = m.symbols();

	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t i = 0; i + 1 < w.size(); ++i) {
			++count;
			if (w[i] == w[i + 1]) {
				w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
				changed = true;
			} else if (i + 3 < w.size() && w[i + 2] == w[i] && w[i + 3] == w[i + 1]) {
				w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 2),
				        w.begin() + static_cast<std::ptrdiff_t>(i + 4));
				changed = true;
			}
			if (changed) {
				++count;
				break;
			}
		}
	}

	std::string s = ModalityWord(w).print();
	for (CanonicalModality c : all_canonical_modalities)
		if (to_string(c) == s)
			return c;
	throw std::logic_error("canonicalize left a non-canonical word " + s);
}

bool modality_leq(CanonicalModality m, CanonicalModality n)
{
	using C = CanonicalModality;
	if (m == n)
		return true;
	/* Everything strictly above each element. */
	switch (m) {
	case C::OfCourse: return true;
	case C::Epsilon: return n == C::WhyNot;
	case C::OfCourseWhyNotOfCourse:
		return n == C::OfCourseWhyNot || n == C::WhyNotOfCourse || n == C::WhyNotOfCourseWhyNot ||
		       n == C::WhyNot;
	case C::OfCourseWhyNot:
	case C::WhyNotOfCourse: return n == C::WhyNotOfCourseWhyNot || n == C::WhyNot;
	case C::WhyNotOfCourseWhyNot: return n == C::WhyNot;
	case C::WhyNot: return false;
	}
	return false;
}

ModalizedLiteral decompose(const Formula &f)
{
	std::vector<Modality> mods;
	const Formula *cur = &f;
	while (cur->is_modal()) {
		mods.push_back(cur->modality());
		cur = &cur->body();
	}
	if (!cur->is_atom())
		throw FragmentError("expected a modalized literal, got " + print(f));
	return {ModalityWord(std::move(mods)), *cur};
}

namespace {

struct Item {
	CanonicalModality mod;
	Formula literal;
};

bool exact_duals(const Item &a, const Item &b)
{
	return b.mod == dual(a.mod) && b.literal == negate(a.literal);
}

bool entailing_duals(const Item &a, const Item &b)
{
	return b.literal == negate(a.literal) && modality_leq(dual(a.mod), b.mod);
}

bool starts_with_why_not(CanonicalModality m)
{
	return m == CanonicalModality::WhyNot || m == CanonicalModality::WhyNotOfCourse ||
	       m == CanonicalModality::WhyNotOfCourseWhyNot;
}

} // namespace

EllResult decide_ell(const Sequent &s, EllMode mode)
{
	EllResult r;
	std::vector<Item> items;
	items.reserve(s.size());
	for (const Formula &f : s) {
		ModalizedLiteral ml = decompose(f);
		items.push_back({canonicalize(ml.modality, &r.steps), ml.literal});
	}

	std::vector<bool> alive(items.size(), true);
	auto sweep = [&](auto partners) {
		for (std::size_t i = 0; i < items.size(); ++i) {
			if (!alive[i])
				continue;
			for (std::size_t j = i + 1; j < items.size(); ++j) {
				if (!alive[j])
					continue;
				++r.steps;
				if (partners(items[i], items[j])) {
					alive[i] = alive[j] = false;
					break;
				}
			}
		}
	};
	/* Extended mode runs the exact pass first, so it accepts whatever
	 * literal mode accepts. */
	sweep(exact_duals);
	if (mode == EllMode::Extended)
		sweep(entailing_duals);

	bool accept = true;
	for (std::size_t i = 0; i < items.size(); ++i) {
		++r.steps;
		if (alive[i] && !(mode == EllMode::Extended && starts_with_why_not(items[i].mod)))
			accept = false;
	}
	r.verdict = accept ? Verdict::Provable : Verdict::NotProvable;
	return r;
}

nlohmann::json ell_discrepancy(const Sequent &s, Verdict literal, Verdict oracle)
{
	return {{"sequent", print(s)},
	        {"literal_verdict", std::string(to_string(literal))},
	        {"oracle_verdict", std::string(to_string(oracle))}};
}

} // namespace llwb
