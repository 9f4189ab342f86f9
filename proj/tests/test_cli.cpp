/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
namespace cli = llwb::cli;

namespace {

struct Invocation {
	int code;
	std::string out, err;
};

Invocation invoke(std::vector<std::string> args, const std::string &stdin_text = "")
{
	std::istringstream in(stdin_text);
	std::ostringstream out, err;
	int code = cli::run(args, in, out, err);
	return {code, out.str(), err.str()};
}

json doc(const Invocation &r) { return json::parse(r.out); }

} // namespace

TEST_CASE("decide routes by fragment")
{
	auto r = invoke({"decide", "|- p | p^"});
	CHECK(r.code == cli::Ok);
	CHECK(r.out.rfind("provable\n", 0) == 0);
	CHECK(r.out.find("decider: proofnet") != std::string::npos);

	CHECK(invoke({"decide", "|- p + p^"}).code == cli::Negative);

	auto d = [](const char *s) { return doc(invoke({"decide", "--format", "json", s})); };
	CHECK(d("|- p * q, p^, q^").at("decider") == "proofnet");
	CHECK(d("p & q |- p").at("decider") == "additive");
	CHECK(d("|- !p, ?p^").at("decider") == "ell");
	CHECK(d("|- p * (q & r), p^, q^ + r^").at("decider") == "fmall");
	CHECK(d("|- !(p * q), ?(p^ | q^)").at("decider") == "calculus");
	CHECK(d("p, [p -o q] |- q").at("decider") == "horn");

	json j = d("|- p * q, p^, q^");
	CHECK(j.at("status") == "provable");
	CHECK(j.at("fragment") == "MLL");
	CHECK(j.at("certificate").at("kind").is_string());
	CHECK(j.at("certificate_checked") == true);
}

TEST_CASE("forced fragments and modes")
{
	CHECK(invoke({"decide", "--fragment", "mall", "|- !p, ?p^"}).code == cli::Usage);
	CHECK(invoke({"decide", "--fragment", "ell", "|- ?p, p^"}).code == cli::Negative);
	CHECK(invoke({"decide", "--fragment", "ell", "--mode", "extended", "|- ?p, p^"}).code == cli::Ok);
	CHECK(invoke({"decide", "--fragment", "all", "p, q |- p"}).code == cli::Usage);
	CHECK(invoke({"decide", "--mode", "weakening", "p * s, [p -o q] |- q"}).code == cli::Ok);
	CHECK(invoke({"decide", "p * s, [p -o q] |- q"}).code == cli::Negative);
}

TEST_CASE("input from stdin")
{
	CHECK(invoke({"decide"}, "|- p, p^\n").code == cli::Ok);
	CHECK(invoke({"decide", "-"}, "|- p, q\n").code == cli::Negative);
}

TEST_CASE("exit codes for bad input")
{
	auto bad = invoke({"decide", "p -o q"});
	CHECK(bad.code == cli::DataError);
	CHECK(bad.err.find("parse error: 1:7") != std::string::npos);
	CHECK(invoke({"decide", "--bogus", "x"}).code == cli::Usage);
	CHECK(invoke({}).code == cli::Usage);
	CHECK(invoke({"check-proof"}, "{not json").code == cli::DataError);
}

TEST_CASE("proofs and nets round trip through the checkers")
{
	auto p = invoke({"prove", "--format", "json", "|- p * q, p^, q^"});
	REQUIRE(p.code == cli::Ok);
	json j = doc(p);
	CHECK(j.at("status") == "provable");
	CHECK(invoke({"check-proof"}, p.out).code == cli::Ok);
	CHECK(invoke({"check-proof"}, j.at("certificate").at("data").dump()).code == cli::Ok);

	json broken = j.at("certificate").at("data");
	broken["rule"] = "par";
	CHECK(invoke({"check-proof"}, broken.dump()).code == cli::Negative);

	auto n = invoke({"decide", "--format", "json", "|- p * q, p^, q^"});
	auto c = invoke({"check-net"}, n.out);
	CHECK(c.code == cli::Ok);
	CHECK(c.out.rfind("valid", 0) == 0);
}

TEST_CASE("json output is stable")
{
	auto a = invoke({"decide", "--format", "json", "|- p & q, p^ + q^"});
	auto b = invoke({"decide", "--format", "json", "|- p & q, p^ + q^"});
	json ja = doc(a), jb = doc(b);
	ja.erase("stats");
	jb.erase("stats");
	CHECK(ja == jb);
	CHECK(json::parse(ja.dump()) == ja);
}

TEST_CASE("parse reports fragments")
{
	json j = doc(invoke({"parse", "--format", "json", "p |- p -o q"}));
	CHECK(j.at("kind") == "sequent");
	CHECK(j.at("one_sided") == "|- p^, p^ | q");
	CHECK(j.at("fragment") == "MLL");
	CHECK(doc(invoke({"parse", "--format", "json", "p, [p -o q] |- q"})).at("kind") == "horn");
}

TEST_CASE("bench")
{
	CHECK(invoke({"bench"}, "").code == cli::Ok);
	CHECK(invoke({"bench"}, "# comment only\n").code == cli::Ok);
	auto good = invoke({"bench"}, "provable |- p, p^\nnot_provable |- p * p^\n");
	CHECK(good.code == cli::Ok);
	CHECK(good.out.find("mismatches: 0") != std::string::npos);
	auto bad = invoke({"bench"}, "not_provable |- p | p^\n");
	CHECK(bad.code == cli::Negative);
	CHECK(bad.out.find("mismatches: 1") != std::string::npos);
	CHECK(invoke({"bench"}, "maybe |- p\n").code == cli::DataError);
}

TEST_CASE("encoders feed the deciders")
{
	auto q = invoke({"encode", "qbf", "E x. x"});
	REQUIRE(q.code == cli::Ok);
	CHECK(invoke({"decide", "--fragment", "mall"}, q.out).code == cli::Ok);
	CHECK(invoke({"decide", "--fragment", "mall"}, invoke({"encode", "qbf", "A x. x"}).out).code ==
	      cli::Negative);

	auto p = invoke({"encode", "3part"}, "12 1\n4 4 4\n");
	REQUIRE(p.code == cli::Ok);
	CHECK(invoke({"decide"}, p.out).code == cli::Ok);
	CHECK(invoke({"decide"}, invoke({"encode", "3part", "12 1 4 4 5"}).out).code == cli::Negative);

	auto t = invoke({"encode", "task", "p, [p -> q] |- q"});
	REQUIRE(t.code == cli::Ok);
	CHECK(invoke({"decide", "--mode", "weakening"}, t.out).code == cli::Ok);
	CHECK(invoke({"encode", "task", "p, [p -> t] |- t"}).code == cli::DataError);
}

TEST_CASE("measure")
{
	json j = doc(invoke({"measure", "--format", "json", "|- p, p^ + bot"}));
	CHECK(j.at("sigma_bound") == 1);
	CHECK(j.at("pi_bound") == 1);
	CHECK(j.at("provable") == true);
	CHECK(invoke({"measure", "|- p + q"}).code == cli::Negative);
}

TEST_CASE("depth from the environment")
{
	const char *seq = "|- (p | q) | r, (r^ * p^) * q^";
	::setenv("LLWB_DEPTH", "1", 1);
	CHECK(invoke({"prove", seq}).code == cli::Unknown);
	CHECK(invoke({"prove", "--depth", "40", seq}).code == cli::Ok);
	::unsetenv("LLWB_DEPTH");
	CHECK(invoke({"prove", seq}).code == cli::Ok);
}

TEST_CASE("dot output")
{
	auto r = invoke({"decide", "--emit", "dot", "|- p | p^"});
	CHECK(r.code == cli::Ok);
	CHECK(r.out.rfind("digraph", 0) == 0);
	CHECK(invoke({"decide", "--emit", "dot", "p & q |- p"}).out.rfind("digraph", 0) == 0);
}
