/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/core/sequent.hpp"

#include <algorithm>

namespace llwb {

Sequent Sequent::without(std::size_t i) const
{
	std::vector<Formula> out;
	out.reserve(formulas_.size());
	for (std::size_t j = 0; j < formulas_.size(); ++j)
		if (j != i)
			out.push_back(formulas_[j]);
	return Sequent(std::move(out));
}

std::vector<Formula> Sequent::sorted() const
{
	auto v = formulas_;
	std::sort(v.begin(), v.end());
	return v;
}

std::size_t Sequent::total_size() const
{
	std::size_t n = 0;
	for (const auto &f : formulas_)
		n += f.size();
	return n;
}

bool operator==(const Sequent &a, const Sequent &b)
{
	return a.size() == b.size() && a.sorted() == b.sorted();
}

namespace {

bool same_multiset(std::vector<Formula> a, std::vector<Formula> b)
{
	std::sort(a.begin(), a.end());
	std::sort(b.begin(), b.end());
	return a == b;
}

} // namespace

bool operator==(const TwoSidedSequent &a, const TwoSidedSequent &b)
{
	return same_multiset(a.antecedent, b.antecedent) && same_multiset(a.succedent, b.succedent);
}

Sequent normalize_two_sided(const TwoSidedSequent &s)
{
	std::vector<Formula> out;
	out.reserve(s.antecedent.size() + s.succedent.size());
	for (const auto &a : s.antecedent)
		out.push_back(negate(a));
	for (const auto &b : s.succedent)
		out.push_back(b);
	return Sequent(std::move(out));
}

} // namespace llwb
