/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "llwb/core/syntax.hpp"
#include "llwb/ell/ell.hpp"

namespace llwb::testing {

/* Exact provability of sequents of modalized literals.
 *
 * A cut-free proof of such a sequent has no binary rule, so it is a single
 * branch ending in one axiom p, p^. A contracted copy of ?A must therefore
 * be weakened later, and dropping it up front gives a proof of the same
 * sequent; the search below uses weakening, dereliction, promotion and the
 * axiom only. Every step shrinks the sequent, so it terminates. Works on
 * raw modality words and never consults the lattice. */
class EllOracle {
public:
	bool provable(const Sequent &s)
	{
		State st;
		for (const Formula &f : s) {
			ModalizedLiteral ml = decompose(f);
			st.push_back({ml.modality.print(), print(ml.literal)});
		}
		return solve(std::move(st));
	}

private:
	/* (word, printed literal) */
	using State = std::vector<std::pair<std::string, std::string>>;

	static std::string dual_literal(const std::string &lit)
	{
		return lit.ends_with('^') ? lit.substr(0, lit.size() - 1) : lit + "^";
	}

	bool solve(State st)
	{
		std::sort(st.begin(), st.end());
		if (auto it = memo_.find(st); it != memo_.end())
			return it->second;
		bool ok = false;
		if (st.size() == 2 && st[0].first.empty() && st[1].first.empty() &&
		    st[1].second == dual_literal(st[0].second))
			ok = true;
		for (std::size_t i = 0; i < st.size() && !ok; ++i) {
			const std::string &w = st[i].first;
			if (w.starts_with('?')) {
				State weak = st;
				weak.erase(weak.begin() + static_cast<std::ptrdiff_t>(i));
				State der = st;
				der[i].first.erase(0, 1);
				ok = solve(std::move(weak)) || solve(std::move(der));
			} else if (w.starts_with('!')) {
				bool others = true;
				for (std::size_t k = 0; k < st.size(); ++k)
					if (k != i && !st[k].first.starts_with('?'))
						others = false;
				if (others) {
					State prom = st;
					prom[i].first.erase(0, 1);
					ok = solve(std::move(prom));
				}
			}
		}
		memo_.emplace(std::move(st), ok);
		return ok;
	}

	std::map<State, bool> memo_;
};

} // namespace llwb::testing
