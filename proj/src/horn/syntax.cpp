/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <cctype>

#include "llwb/horn/horn.hpp"

namespace llwb {

namespace {

/* Character-level reader shared by the Horn and task sequent parsers. */
class Cursor {
public:
	explicit Cursor(std::string_view s) : s_(s) {}

	void skip()
	{
		while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
			advance();
	}

	bool at_end()
	{
		skip();
		return i_ >= s_.size();
	}

	bool peek(std::string_view tok)
	{
		skip();
		return s_.substr(i_, tok.size()) == tok;
	}

	bool accept(std::string_view tok)
	{
		if (!peek(tok))
			return false;
		for (std::size_t k = 0; k < tok.size(); ++k)
			advance();
		return true;
	}

	void expect(std::string_view tok)
	{
		if (!accept(tok))
			fail("expected '" + std::string(tok) + "'");
	}

	bool peek_ident()
	{
		skip();
		return i_ < s_.size() && s_[i_] >= 'a' && s_[i_] <= 'z';
	}

	std::string ident()
	{
		if (!peek_ident())
			fail("expected an atom");
		std::size_t j = i_;
		while (j < s_.size() &&
		       (std::islower(static_cast<unsigned char>(s_[j])) || std::isdigit(static_cast<unsigned char>(s_[j])) ||
		        s_[j] == '_'))
			++j;
		std::string out(s_.substr(i_, j - i_));
		while (i_ < j)
			advance();
		return out;
	}

	unsigned number()
	{
		skip();
		if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
			fail("expected a number");
		unsigned long v = 0;
		while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
			v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
			if (v > 1000000)
				fail("number too large");
			advance();
		}
		return static_cast<unsigned>(v);
	}

	[[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_, col_); }

private:
	void advance()
	{
		if (s_[i_] == '\n') {
			++line_;
			col_ = 1;
		} else {
			++col_;
		}
		++i_;
	}

	std::string_view s_;
	std::size_t i_ = 0, line_ = 1, col_ = 1;
};

/* conj := '1' | atom ('^' n)? ('*' atom ('^' n)?)* */
SimpleConjunction parse_conj(Cursor &c)
{
	SimpleConjunction out;
	if (c.accept("1"))
		return out;
	do {
		std::string a = c.ident();
		unsigned n = 1;
		if (c.accept("^"))
			n = c.number();
		out.add(a, n);
	} while (c.accept("*"));
	return out;
}

Implication parse_implication(Cursor &c, bool intuitionistic)
{
	if (c.accept("(")) {
		Implication i = parse_implication(c, intuitionistic);
		c.expect(")");
		return i;
	}
	Implication i;
	i.from = parse_conj(c);
	c.expect(intuitionistic ? "->" : "-o");
	i.to = parse_conj(c);
	return i;
}

HornClause parse_clause(Cursor &c, bool banged)
{
	c.expect("[");
	HornClause out;
	if (c.peek("(")) {
		Implication a = parse_implication(c, false);
		c.expect("&");
		out = HornClause::with(a, parse_implication(c, false), banged);
	} else {
		Implication a = parse_implication(c, false);
		if (c.accept("+"))
			out = HornClause::plus(a.from, a.to, parse_conj(c), banged);
		else if (c.accept("&"))
			out = HornClause::with(a, parse_implication(c, false), banged);
		else
			out = HornClause::plain(a.from, a.to, banged);
	}
	c.expect("]");
	return out;
}

} // namespace

HornSequent parse_horn(std::string_view text)
{
	Cursor c(text);
	HornSequent hs;
	if (!c.peek("|-")) {
		do {
			if (c.accept("!")) {
				HornClause cl = parse_clause(c, true);
				cl.banged = false;
				hs.delta.push_back(cl);
			} else if (c.peek("[")) {
				hs.gamma.push_back(parse_clause(c, false));
			} else {
				hs.w = hs.w + parse_conj(c);
			}
		} while (c.accept(","));
	}
	c.expect("|-");
	if (!c.at_end())
		hs.z = parse_conj(c);
	if (!c.at_end())
		c.fail("trailing input");
	return hs;
}

std::string print(const HornSequent &hs)
{
	std::vector<std::string> parts;
	if (!hs.w.empty())
		parts.push_back(print(hs.w));
	for (const auto &cl : hs.gamma)
		parts.push_back(print(cl));
	for (auto cl : hs.delta) {
		cl.banged = true;
		parts.push_back(print(cl));
	}
	std::string out;
	for (std::size_t i = 0; i < parts.size(); ++i)
		out += (i ? ", " : "") + parts[i];
	out += out.empty() ? "|-" : " |-";
	if (!hs.z.empty())
		out += " " + print(hs.z);
	return out;
}

bool looks_like_horn(std::string_view text) { return text.find('[') != std::string_view::npos; }

TaskSequent parse_task(std::string_view text)
{
	Cursor c(text);
	TaskSequent ts;
	if (!c.peek("|-")) {
		do {
			if (c.accept("[")) {
				TaskClause cl;
				if (c.accept("(")) {
					cl.embedded = true;
					cl.u = parse_conj(c);
					c.expect("->");
					cl.v = parse_conj(c);
					c.expect(")");
				} else {
					cl.v = parse_conj(c);
				}
				c.expect("->");
				cl.y = parse_conj(c);
				c.expect("]");
				ts.gamma.push_back(cl);
			} else {
				ts.w = ts.w + parse_conj(c);
			}
		} while (c.accept(","));
	}
	c.expect("|-");
	if (!c.at_end())
		ts.z = parse_conj(c);
	if (!c.at_end())
		c.fail("trailing input");
	return ts;
}

std::string print(const TaskSequent &ts)
{
	std::vector<std::string> parts;
	if (!ts.w.empty())
		parts.push_back(print(ts.w));
	for (const auto &cl : ts.gamma) {
		if (cl.embedded)
			parts.push_back("[(" + print(cl.u) + " -> " + print(cl.v) + ") -> " + print(cl.y) + "]");
		else
			parts.push_back("[" + print(cl.v) + " -> " + print(cl.y) + "]");
	}
	std::string out;
	for (std::size_t i = 0; i < parts.size(); ++i)
		out += (i ? ", " : "") + parts[i];
	out += out.empty() ? "|-" : " |-";
	if (!ts.z.empty())
		out += " " + print(ts.z);
	return out;
}

} // namespace llwb
