/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "llwb/core/sequent.hpp"

namespace llwb::testing {

/* Exhaustive formula enumeration by size. Binary connectives are all
 * commutative up to provability, so only left <= right is produced when
 * `commutative_only` is set. */
struct Alphabet {
	std::vector<Formula> leaves;
	std::vector<Connective> connectives;
	std::vector<Modality> modalities;
	bool commutative_only = true;
};

inline std::vector<Formula> literals(std::initializer_list<const char *> atoms)
{
	std::vector<Formula> out;
	for (const char *a : atoms) {
		out.push_back(Formula::atom(a));
		out.push_back(Formula::atom(a, true));
	}
	return out;
}

/* by_size[n] holds every formula of size exactly n. */
inline std::vector<std::vector<Formula>> formulas_by_size(const Alphabet &al, std::size_t max_size)
{
	std::vector<std::vector<Formula>> by(max_size + 1);
	if (max_size >= 1)
		by[1] = al.leaves;
	for (std::size_t n = 2; n <= max_size; ++n) {
		for (auto m : al.modalities)
			for (const auto &b : by[n - 1])
				by[n].push_back(Formula::modal(m, b));
		for (std::size_t l = 1; l + 1 < n; ++l) {
			std::size_t r = n - 1 - l;
			if (al.commutative_only && l > r)
				continue;
			for (auto c : al.connectives)
				for (std::size_t i = 0; i < by[l].size(); ++i)
					for (std::size_t j = (al.commutative_only && l == r) ? i : 0; j < by[r].size(); ++j)
						by[n].push_back(Formula::binary(c, by[l][i], by[r][j]));
		}
	}
	return by;
}

/* Calls `f` on every non-empty multiset of formulas whose sizes sum to at
 * most `max_total`. */
inline void for_each_sequent(const Alphabet &al, std::size_t max_total, const std::function<void(const Sequent &)> &f)
{
	auto by = formulas_by_size(al, max_total);
	std::vector<Formula> all;
	for (const auto &v : by)
		all.insert(all.end(), v.begin(), v.end());
	std::vector<Formula> cur;
	auto rec = [&](auto &self, std::size_t from, std::size_t budget) -> void {
		if (!cur.empty())
			f(Sequent(cur));
		for (std::size_t i = from; i < all.size(); ++i) {
			if (all[i].size() > budget)
				break; // `all` is ordered by size
			cur.push_back(all[i]);
			self(self, i, budget - all[i].size());
			cur.pop_back();
		}
	};
	rec(rec, 0, max_total);
}

/* Uniform-ish random formula of exactly `size` nodes (size must be odd when
 * there are no modalities). */
inline Formula random_formula(const Alphabet &al, std::size_t size, std::mt19937_64 &rng)
{
	auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
	if (size <= 1)
		return al.leaves[pick(al.leaves.size())];
	bool can_binary = size >= 3 && (!al.modalities.empty() || size % 2 == 1);
	if (!al.modalities.empty() && (!can_binary || al.connectives.empty() || pick(3) == 0))
		return Formula::modal(al.modalities[pick(al.modalities.size())], random_formula(al, size - 1, rng));
	std::size_t inner = size - 1;
	std::size_t l;
	if (al.modalities.empty()) {
		l = 2 * pick(inner / 2) + 1;
	} else {
		l = 1 + pick(inner - 1);
	}
	return Formula::binary(al.connectives[pick(al.connectives.size())], random_formula(al, l, rng),
	                       random_formula(al, inner - l, rng));
}

} // namespace llwb::testing
