#include "qsqrt/sqrt_circuit.hpp"

#include "qsqrt/simulate.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace qsqrt;

namespace {

std::uint64_t isqrt_ref(std::uint64_t a) {
    std::uint64_t y = 0;
    while ((y + 1) * (y + 1) <= a) ++y;
    return y;
}

Circuit drop_gate(const Circuit& c, std::size_t index) {
    Circuit out = new_circuit(c.width(), c.level());
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        if (i != index) out.append(c.gates()[i]);
    }
    if (c.layout()) out.set_layout(*c.layout());
    return out;
}

}  // namespace

TEST_CASE("layout geometry") {
    const SqrtLayout L = SqrtLayout::make(6);
    CHECK(L.n == 6);
    CHECK(L.width() == 13);
    CHECK(L.r_lo == 0);
    CHECK(L.r_hi == 5);
    CHECK(L.f_lo == 6);
    CHECK(L.f_hi == 11);
    CHECK(L.z == 12);
    CHECK(L.r(3) == 3);
    CHECK(L.f(0) == 6);
    CHECK(L.y_lo == L.f(2));
    CHECK(L.y_hi == L.f(4));  // n/2 = 3 root bits at F2..F4

    const RegisterLayout regs = L.registers();
    CHECK(regs.find("R")->lo == 0);
    CHECK(regs.find("F")->hi == 11);
    CHECK(regs.find("z")->lo == 12);
    regs.validate(L.width());  // must not throw
}

TEST_CASE("layout rejects invalid widths with the pinned message") {
    for (std::uint32_t bad : {0u, 2u, 3u, 5u, 7u, 9u}) {
        CHECK_THROWS_WITH_AS(SqrtLayout::make(bad), "n must be even and >= 4",
                             std::invalid_argument);
    }
}

TEST_CASE("classical recurrence on the worked example a=26, n=6") {
    const OracleResult r = nonrestoring_sqrt_oracle(26, 6);
    CHECK(r.y == 5);
    CHECK(r.remainder == 1);

    const std::vector<std::pair<std::uint64_t, std::uint64_t>> want = {
        {0b000001, 0b000001}, {0b000000, 0b000001}, {0b000010, 0b000101},
        {0b111101, 0b000101}, {0b110110, 0b001011}, {0b000001, 0b001011},
        {0b000001, 0b010101}, {0b000001, 0b010101},
    };
    REQUIRE(r.trace.rows.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(r.trace.rows[i].r == want[i].first);
        CHECK(r.trace.rows[i].f == want[i].second);
    }

    const std::string text = r.trace.to_text();
    CHECK(text.find("111101  000101") != std::string::npos);
    CHECK(text.find("110110  001011") != std::string::npos);
    CHECK(text.find("i=2: R >= 0 so Y2=1; shift in a3 a2; F = Y2 01") !=
          std::string::npos);
}

TEST_CASE("classical recurrence equals integer square root for n = 4..12") {
    for (std::uint32_t n : {4u, 6u, 8u, 10u, 12u}) {
        for (std::uint64_t a = 0; a < (1ull << (n - 1)); ++a) {
            const OracleResult r = nonrestoring_sqrt_oracle(a, n);
            const std::uint64_t y = isqrt_ref(a);
            CAPTURE(n);
            CAPTURE(a);
            CHECK(r.y == y);
            CHECK(r.remainder == a - y * y);
            CHECK(r.trace.rows.size() == n + 2);
        }
    }
}

TEST_CASE("recurrence domain errors") {
    CHECK_THROWS_WITH_AS(nonrestoring_sqrt_oracle(0, 5),
                         "n must be even and >= 4", std::invalid_argument);
    CHECK_THROWS_WITH_AS(nonrestoring_sqrt_oracle(32, 6),
                         "a must satisfy 0 <= a < 2^(n-1)",
                         std::invalid_argument);
    CHECK_THROWS_AS(nonrestoring_sqrt_oracle(0, 64), std::invalid_argument);
    CHECK(nonrestoring_sqrt_oracle(31, 6).y == 5);  // top of the domain
}

TEST_CASE("part 1 opens with the documented gate prefix") {
    const std::vector<Gate> g = build_part1(6);
    REQUIRE(g.size() >= 5);
    CHECK(g[0] == gate_x(4));        // X on R4
    CHECK(g[1] == gate_cnot(4, 5));  // CNOT R4 -> R5
    CHECK(g[2] == gate_cnot(5, 7));  // CNOT R5 -> F1
    CHECK(g[3] == gate_ncx(5, 12));  // NCX R5 -> z
    CHECK(g[4] == gate_ncx(5, 8));   // NCX R5 -> F2
    // followed by a width-4 ADD/SUB on the top of R against the low F bits
}

TEST_CASE("part 2 bounds") {
    CHECK_THROWS_AS(build_part2(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_part2(8, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_part2(8, 4), std::invalid_argument);
    CHECK(build_part2(8, 2).size() > 0);
    CHECK(build_part2(8, 3).size() > 0);
}

TEST_CASE("assembled circuit shape") {
    const std::size_t golden_sizes[] = {61, 128, 214, 319};
    const std::uint64_t golden_ccx[] = {22, 42, 66, 94};
    std::size_t k = 0;
    for (std::uint32_t n : {4u, 6u, 8u, 10u}) {
        auto [c, layout] = build_sqrt_circuit(n);
        CHECK(c.width() == 2 * n + 1);
        CHECK(c.level() == Level::Macro);
        REQUIRE(c.layout().has_value());
        CHECK(c.layout()->find("R") != nullptr);
        CHECK(c.layout()->find("F") != nullptr);
        CHECK(c.layout()->find("z") != nullptr);
        CHECK(c.gates().size() == golden_sizes[k]);
        std::uint64_t ccx = 0;
        for (const Gate& g : c.gates())
            if (g.kind == GateKind::CCX) ++ccx;
        CHECK(ccx == golden_ccx[k]);
        ++k;
    }
}

TEST_CASE("encode and decode agree with the layout") {
    const SqrtLayout L = SqrtLayout::make(6);
    const BasisState s = encode_input(26, L);
    CHECK(s.range_value(L.r_lo, 6) == 26);
    CHECK(s.range_value(L.f_lo, 6) == 1);
    CHECK(s.bit(L.z) == 0);
    CHECK_THROWS_AS(encode_input(32, L), std::invalid_argument);

    BasisState t = BasisState::zeros(L.width());
    t.set_range_value(L.y_lo, 3, 5);       // Y = 5
    t.set_range_value(L.r_lo, 6, 1);       // remainder 1
    t.set_bit(L.f(0), 1);                  // F0 = 1
    DecodedOutput d = decode_output(t, L);
    CHECK(d.y == 5);
    CHECK(d.remainder == 1);
    CHECK(d.restored);

    t.set_bit(L.z, 1);
    CHECK(!decode_output(t, L).restored);
    t.set_bit(L.z, 0);
    t.set_bit(L.f(1), 1);
    CHECK(!decode_output(t, L).restored);
    t.set_bit(L.f(1), 0);
    t.set_bit(L.f(5), 1);  // junk above the root window
    CHECK(!decode_output(t, L).restored);
}

TEST_CASE("exhaustive circuit-vs-recurrence verification for n = 4..10") {
    for (std::uint32_t n : {4u, 6u, 8u, 10u}) {
        const VerifyResult res = verify_sqrt_exhaustive(n);
        CAPTURE(n);
        CHECK(res.ok());
        CHECK(res.inputs_checked == (1ull << (n - 1)));
    }
}

TEST_CASE("verification pinpoints the smallest counterexample in a mutant") {
    auto [c, layout] = build_sqrt_circuit(4);
    // Deleting any single gate must break at least one input; spot-check a
    // few positions spread over the circuit.
    for (std::size_t idx : {0ul, 7ul, 30ul, c.gates().size() - 1}) {
        const Circuit mutant = drop_gate(c, idx);
        const VerifyResult res = verify_against_oracle(mutant, layout);
        CAPTURE(idx);
        REQUIRE(!res.ok());

        // The reported counterexample is the smallest failing radicand,
        // independent of thread count.
        std::uint64_t smallest = ~0ull;
        for (std::uint64_t a = 0; a < 8; ++a) {
            const BasisState out =
                apply_classical(mutant, encode_input(a, layout));
            const DecodedOutput got = decode_output(out, layout);
            const OracleResult want = nonrestoring_sqrt_oracle(a, 4);
            if (got.y != want.y || got.remainder != want.remainder ||
                !got.restored) {
                smallest = a;
                break;
            }
        }
        REQUIRE(smallest != ~0ull);
        CHECK(res.failure->a == smallest);
        const VerifyResult single = verify_against_oracle(mutant, layout, 1);
        CHECK(single.failure->a == smallest);
    }
}

TEST_CASE("verify_against_oracle validates the layout width") {
    auto [c, layout] = build_sqrt_circuit(4);
    const SqrtLayout other = SqrtLayout::make(6);
    CHECK_THROWS_AS(verify_against_oracle(c, other), std::invalid_argument);
}
