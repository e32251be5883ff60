#include "vfl/borel.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace vfl;

namespace {

IotaTable constant_iota(std::vector<Nat> seq) {
    IotaTable iota;
    iota.arity = 1;
    iota.default_seq = std::move(seq);
    return iota;
}

std::vector<Nat> nats(std::initializer_list<std::uint64_t> values) {
    std::vector<Nat> out;
    for (auto v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("iota tables validate") {
    IotaTable iota = constant_iota(nats({1, 2}));
    CHECK(iota.validate().empty());
    IotaTable empty_default = constant_iota({});
    CHECK_FALSE(empty_default.validate().empty());
    IotaTable bad = constant_iota(nats({1}));
    bad.entries[nats({0, 0})] = nats({3});
    CHECK_FALSE(bad.validate().empty());
    bad.arity = 2;
    CHECK(bad.validate().empty());
    bad.entries[nats({1, 1})] = {};
    CHECK_FALSE(bad.validate().empty());
}

TEST_CASE("iota file format round trips") {
    IotaTable iota;
    iota.arity = 2;
    iota.default_seq = nats({9});
    iota.entries[nats({0, 0})] = nats({1, 2});
    iota.entries[nats({1, 4})] = nats({0, 0, 7});
    std::istringstream in(iota.to_text());
    IotaTable back = IotaTable::from_stream(in);
    CHECK(back.arity == 2);
    CHECK(back.default_seq == iota.default_seq);
    CHECK(back.entries == iota.entries);

    std::istringstream junk("(1,2) 3 4\n");
    CHECK_THROWS_AS(IotaTable::from_stream(junk), std::runtime_error);
    std::istringstream nodefault("(1) -> 2\n");
    CHECK_THROWS_AS(IotaTable::from_stream(nodefault), std::runtime_error);
}

TEST_CASE("sentences have alternating quantifier blocks and no free variables") {
    for (std::size_t n = 1; n <= 4; ++n) {
        IotaTable iota = constant_iota(nats({5}));
        iota.arity = n;
        for (SentenceKind kind : {SentenceKind::Sigma, SentenceKind::Pi}) {
            Formula f = build_sentence(iota, n, kind);
            CHECK(free_vars(f).empty());
            // walk the prefix, recording the block kinds
            const Formula* at = &f;
            std::size_t blocks = 0;
            bool last_exists = false;
            while (true) {
                if (const auto* q = std::get_if<ExistsFormula>(&at->node().v)) {
                    last_exists = true;
                    bool expect_exists = (kind == SentenceKind::Sigma) == (blocks % 2 == 0);
                    CHECK(expect_exists);
                    at = &q->body;
                } else if (const auto* q = std::get_if<ForallFormula>(&at->node().v)) {
                    last_exists = false;
                    bool expect_exists = (kind == SentenceKind::Sigma) == (blocks % 2 == 0);
                    CHECK_FALSE(expect_exists);
                    at = &q->body;
                } else {
                    break;
                }
                ++blocks;
            }
            CHECK(blocks == n);
            const auto* eq = std::get_if<EqFormula>(&at->node().v);
            REQUIRE(eq != nullptr);
            const auto* target = std::get_if<NumeralTerm>(&eq->rhs.node().v);
            REQUIRE(target != nullptr);
            CHECK(target->value == (last_exists ? 1 : 0));
        }
    }
}

TEST_CASE("the rank-one existential sentence spells out the comparison") {
    IotaTable iota = constant_iota(nats({1, 2}));
    Formula f = build_sentence(iota, 1, SentenceKind::Sigma);
    CHECK(print_formula(f) == "exists x1. =(tau(x1;f(z)(0) ...z f(z)(l(x1))),1)");
    Signature sig = borel_signature(1);
    CHECK(parse_formula(print_formula(f), sig) == f);
}

TEST_CASE("membership checking over finite prefixes") {
    IotaTable iota = constant_iota(nats({1, 2}));
    Formula sentence = build_sentence(iota, 1, SentenceKind::Sigma);

    CHECK(check_membership(BorModel{nats({1, 2, 7}), iota}, sentence, 8) == Truth::True);
    // no witness is ever found, but an existential cannot be refuted
    CHECK(check_membership(BorModel{nats({3, 1, 4}), iota}, sentence, 8) == Truth::Unknown);
    // the comparison needs f(1), which the prefix does not store
    CHECK(check_membership(BorModel{nats({1}), iota}, sentence, 8) == Truth::Unknown);
}

TEST_CASE("the dual rank-one sentence can be refuted by a witness") {
    IotaTable iota = constant_iota(nats({1, 2}));
    Formula pi = build_sentence(iota, 1, SentenceKind::Pi);
    // f extends (1,2), so it lies in the cylinder and outside the Pi set
    CHECK(check_membership(BorModel{nats({1, 2, 0}), iota}, pi, 8) == Truth::False);
    CHECK(check_membership(BorModel{nats({1}), iota}, pi, 8) == Truth::Unknown);
}

TEST_CASE("definite verdicts survive prefix extension and larger cutoffs") {
    IotaTable iota = constant_iota(nats({1, 2}));
    Formula sentence = build_sentence(iota, 1, SentenceKind::Sigma);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        std::vector<Nat> prefix;
        std::size_t len = 1 + rng() % 5;
        for (std::size_t j = 0; j < len; ++j) prefix.emplace_back(rng() % 4);
        Truth v = check_membership(BorModel{prefix, iota}, sentence, 6);
        bool extends = prefix.size() >= 2 && prefix[0] == 1 && prefix[1] == 2;
        CHECK((v == Truth::True) == extends);
        std::vector<Nat> longer = prefix;
        for (std::size_t j = 0; j < 1 + rng() % 3; ++j) longer.emplace_back(rng() % 4);
        Truth v2 = check_membership(BorModel{longer, iota}, sentence, 6 + rng() % 10);
        if (v != Truth::Unknown) CHECK(v2 == v);
    }
}

TEST_CASE("a rank-two sentence needs data outside any finite prefix") {
    IotaTable iota;
    iota.arity = 2;
    iota.default_seq = nats({1});
    Formula sentence = build_sentence(iota, 2, SentenceKind::Sigma);
    // exists-forall over an infinite universe: a finite prefix can never settle it
    CHECK(check_membership(BorModel{nats({1, 1, 1}), iota}, sentence, 5) == Truth::Unknown);
}

TEST_CASE("model construction rejects broken inputs") {
    IotaTable iota = constant_iota(nats({1, 2}));
    CHECK_THROWS_AS(borel_model(BorModel{{}, iota}), std::invalid_argument);
    IotaTable wrong = constant_iota(nats({1, 2}));
    CHECK_THROWS_AS(build_sentence(wrong, 2, SentenceKind::Sigma), std::invalid_argument);
    Formula sentence = build_sentence(iota, 1, SentenceKind::Sigma);
    IotaTable two;
    two.arity = 2;
    two.default_seq = nats({1});
    // sentence built for arity 1 does not fit an arity-2 table's language
    CHECK_THROWS_AS(check_membership(BorModel{nats({1}), two}, sentence, 4),
                    std::invalid_argument);
}
