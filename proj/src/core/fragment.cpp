/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/core/fragment.hpp"

#include <array>
#include <utility>

namespace llwb {

namespace {

constexpr unsigned kMul = 1, kAdd = 2, kExp = 4;

unsigned bits(const Formula &f)
{
	switch (f.kind()) {
	case Formula::Kind::Atom:
		return 0;
	case Formula::Kind::Unit:
		return f.is(UnitKind::One) || f.is(UnitKind::Bot) ? kMul : kAdd;
	case Formula::Kind::Binary: {
		unsigned own = f.is(Connective::Tensor) || f.is(Connective::Par) ? kMul : kAdd;
		return own | bits(f.left()) | bits(f.right());
	}
	case Formula::Kind::Modal:
		return kExp | bits(f.body());
	}
	return 0;
}

Fragment from_bits(unsigned b) { return b == 0 ? Fragment::MLL : static_cast<Fragment>(b); }

constexpr std::array<std::pair<Fragment, std::string_view>, 7> kNames{{
	{Fragment::MLL, "MLL"},
	{Fragment::ALL, "ALL"},
	{Fragment::MALL, "MALL"},
	{Fragment::ELL, "ELL"},
	{Fragment::MELL, "MELL"},
	{Fragment::AELL, "AELL"},
	{Fragment::LL, "LL"},
}};

} // namespace

Fragment join(Fragment a, Fragment b)
{
	return static_cast<Fragment>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}

bool leq(Fragment a, Fragment b)
{
	auto x = static_cast<unsigned>(a), y = static_cast<unsigned>(b);
	return (x & y) == x;
}

std::string_view to_string(Fragment f)
{
	for (const auto &[k, n] : kNames)
		if (k == f)
			return n;
	return "?";
}

std::optional<Fragment> fragment_from_string(std::string_view s)
{
	for (const auto &[k, n] : kNames)
		if (n == s)
			return k;
	return std::nullopt;
}

Fragment classify_fragment(const Formula &f) { return from_bits(bits(f)); }

Fragment classify_fragment(const Sequent &s)
{
	unsigned b = 0;
	for (const auto &f : s)
		b |= bits(f);
	return from_bits(b);
}

} // namespace llwb
