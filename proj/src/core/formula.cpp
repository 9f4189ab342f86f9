/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include "llwb/core/formula.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace llwb {

struct Formula::Node {
	Kind kind;
	std::string name;
	bool negated = false;
	int tag = 0; // UnitKind, Connective or Modality
	std::vector<Formula> kids;
	std::size_t size = 1;
	std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v)
{
	h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	return h;
}

std::size_t fnv(std::string_view s)
{
	std::size_t h = 1469598103934665603ULL;
	for (unsigned char c : s) {
		h ^= c;
		h *= 1099511628211ULL;
	}
	return h;
}

} // namespace

Formula Formula::atom(std::string name, bool negated)
{
	if (name.empty())
		throw std::invalid_argument("atom name must be non-empty");
	auto n = std::make_shared<Node>();
	n->kind = Kind::Atom;
	n->hash = mix(mix(fnv(name), negated ? 17 : 3), 1);
	n->name = std::move(name);
	n->negated = negated;
	return Formula(std::move(n));
}

Formula Formula::unit(UnitKind k)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Unit;
	n->tag = static_cast<int>(k);
	n->hash = mix(2, static_cast<std::size_t>(k));
	return Formula(std::move(n));
}

Formula Formula::binary(Connective c, Formula left, Formula right)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Binary;
	n->tag = static_cast<int>(c);
	n->size = 1 + left.size() + right.size();
	n->hash = mix(mix(mix(3, static_cast<std::size_t>(c)), left.hash()), right.hash());
	n->kids = {std::move(left), std::move(right)};
	return Formula(std::move(n));
}

Formula Formula::modal(Modality m, Formula body)
{
	auto n = std::make_shared<Node>();
	n->kind = Kind::Modal;
	n->tag = static_cast<int>(m);
	n->size = 1 + body.size();
	n->hash = mix(mix(4, static_cast<std::size_t>(m)), body.hash());
	n->kids = {std::move(body)};
	return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string &Formula::name() const
{
	assert(is_atom());
	return node_->name;
}

bool Formula::negated() const
{
	assert(is_atom());
	return node_->negated;
}

UnitKind Formula::unit_kind() const
{
	assert(is_unit());
	return static_cast<UnitKind>(node_->tag);
}

Connective Formula::connective() const
{
	assert(is_binary());
	return static_cast<Connective>(node_->tag);
}

Modality Formula::modality() const
{
	assert(is_modal());
	return static_cast<Modality>(node_->tag);
}

const Formula &Formula::left() const
{
	assert(is_binary());
	return node_->kids[0];
}

const Formula &Formula::right() const
{
	assert(is_binary());
	return node_->kids[1];
}

const Formula &Formula::body() const
{
	assert(is_modal());
	return node_->kids[0];
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula &a, const Formula &b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.hash() != b.hash() || a.size() != b.size())
		return false;
	return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula &fa, const Formula &fb)
{
	const auto *a = fa.node_.get();
	const auto *b = fb.node_.get();
	if (a == b)
		return std::strong_ordering::equal;
	if (auto c = a->size <=> b->size; c != 0)
		return c;
	if (auto c = static_cast<int>(a->kind) <=> static_cast<int>(b->kind); c != 0)
		return c;
	if (auto c = a->tag <=> b->tag; c != 0)
		return c;
	if (a->kind == Formula::Kind::Atom) {
		if (auto c = a->name.compare(b->name) <=> 0; c != 0)
			return c;
		return a->negated <=> b->negated;
	}
	for (std::size_t i = 0; i < a->kids.size(); ++i)
		if (auto c = a->kids[i] <=> b->kids[i]; c != 0)
			return c;
	return std::strong_ordering::equal;
}

Connective dual(Connective c)
{
	switch (c) {
	case Connective::Tensor: return Connective::Par;
	case Connective::Par: return Connective::Tensor;
	case Connective::Plus: return Connective::With;
	case Connective::With: return Connective::Plus;
	}
	return c;
}

UnitKind dual(UnitKind u)
{
	switch (u) {
	case UnitKind::One: return UnitKind::Bot;
	case UnitKind::Bot: return UnitKind::One;
	case UnitKind::Top: return UnitKind::Zero;
	case UnitKind::Zero: return UnitKind::Top;
	}
	return u;
}

Modality dual(Modality m)
{
	return m == Modality::OfCourse ? Modality::WhyNot : Modality::OfCourse;
}

Formula negate(const Formula &f)
{
	switch (f.kind()) {
	case Formula::Kind::Atom:
		return Formula::atom(f.name(), !f.negated());
	case Formula::Kind::Unit:
		return Formula::unit(dual(f.unit_kind()));
	case Formula::Kind::Binary:
		return Formula::binary(dual(f.connective()), negate(f.left()), negate(f.right()));
	case Formula::Kind::Modal:
		return Formula::modal(dual(f.modality()), negate(f.body()));
	}
	return f;
}

Formula desugar_implication(ImplicationKind kind, const Formula &a, const Formula &b)
{
	return kind == ImplicationKind::Multiplicative ? par(negate(a), b) : plus(negate(a), b);
}

Polarity polarity(const Formula &f)
{
	switch (f.kind()) {
	case Formula::Kind::Atom:
		return f.negated() ? Polarity::Negative : Polarity::Positive;
	case Formula::Kind::Unit:
		return f.unit_kind() == UnitKind::One || f.unit_kind() == UnitKind::Zero ? Polarity::Positive
		                                                                         : Polarity::Negative;
	case Formula::Kind::Binary:
		return f.connective() == Connective::Tensor || f.connective() == Connective::Plus
		           ? Polarity::Positive
		           : Polarity::Negative;
	case Formula::Kind::Modal:
		return f.modality() == Modality::OfCourse ? Polarity::Positive : Polarity::Negative;
	}
	return Polarity::Positive;
}

bool is_subformula(const Formula &sub, const Formula &f)
{
	if (sub.size() > f.size())
		return false;
	if (sub == f)
		return true;
	if (f.is_binary())
		return is_subformula(sub, f.left()) || is_subformula(sub, f.right());
	if (f.is_modal())
		return is_subformula(sub, f.body());
	return false;
}

} // namespace llwb
