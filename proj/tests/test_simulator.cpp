#include <gtest/gtest.h>

#include "uqc/gadgets.hpp"
#include "uqc/random_circuits.hpp"
#include "uqc/unitary.hpp"
#include "uqc/verify.hpp"

using namespace uqc;

namespace {

const double kTol = 1e-12;

TEST(BasisState, LittleEndianLayout) {
    StateVector s = basis_state("00");
    ASSERT_EQ(s.dim(), 4u);
    EXPECT_EQ(s.amps[0], cplx(1.0));
    s = basis_state("11");
    EXPECT_EQ(s.amps[3], cplx(1.0));
    s = basis_state("10");  // qubit0=1, qubit1=0
    EXPECT_EQ(s.amps[1], cplx(1.0));
}

TEST(ApplyGate, FanoutOnBasis) {
    StateVector out = apply_gate(basis_state("101"), Gate::fanout(0, {1, 2}));
    EXPECT_NEAR(std::abs(out.amps[0b011] - 1.0), 0.0, kTol);
}

TEST(ApplyGate, ZFanoutPhase) {
    StateVector out = apply_gate(basis_state("110"), Gate::zfanout(0, {1, 2}));
    EXPECT_NEAR(std::abs(out.amps[0b011] + 1.0), 0.0, kTol);  // -|110>
}

TEST(ApplyGate, HadamardOnOne) {
    StateVector s(1);
    s.amps[0] = 1.0;
    s = apply_gate(s, Gate::h(0));
    EXPECT_NEAR(std::abs(s.amps[0] - kInvSqrt2), 0.0, kTol);
    EXPECT_NEAR(std::abs(s.amps[1] - kInvSqrt2), 0.0, kTol);
}

TEST(Run, EmptyCircuitIsIdentity) {
    Circuit c(2);
    StateVector s = basis_state("10");
    StateVector out = run(c, s);
    EXPECT_EQ(out.amps, s.amps);
}

TEST(Run, DoubleHadamardCancels) {
    Circuit c(1);
    c.append_layer().gates.push_back(Gate::h(0));
    c.append_layer().gates.push_back(Gate::h(0));
    StateVector out = run(c, basis_state("0"));
    EXPECT_NEAR(std::abs(out.amps[0] - 1.0), 0.0, kTol);
}

TEST(Run, TEighthPowerIsIdentity) {
    Circuit c(1);
    for (int i = 0; i < 8; ++i) c.append_layer().gates.push_back(Gate::t(0));
    StateVector out = run(c, basis_state("1"));
    EXPECT_NEAR(std::abs(out.amps[1] - 1.0), 0.0, kTol);
}

TEST(UnitaryOf, EmptyOneQubit) {
    EXPECT_LE(max_abs_diff(unitary_of(Circuit(1)), Matrix::identity(2)), kTol);
}

TEST(UnitaryOf, CnotPermutation) {
    Circuit c(2);
    c.append_layer().gates.push_back(Gate::cnot(0, 1));
    Matrix u = unitary_of(c);
    // control qubit 0: swaps indices 1 and 3
    EXPECT_EQ(u.at(3, 1), cplx(1.0));
    EXPECT_EQ(u.at(1, 3), cplx(1.0));
    EXPECT_EQ(u.at(0, 0), cplx(1.0));
    EXPECT_EQ(u.at(2, 2), cplx(1.0));
    EXPECT_LE(unitarity_defect(u), 1e-10);
}

TEST(UnitaryOf, WidthCap) {
    EXPECT_THROW(unitary_of(Circuit(13)), CircuitError);
}

TEST(Invariants, NormPreservedOnRandomCircuits) {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        const uint32_t n = 1 + rng.below(5);
        Circuit c = random_circuit(rng, n, 1 + rng.below(8), Family::Fprime);
        StateVector s(n);
        for (auto& a : s.amps) a = cplx{rng.gaussian(), rng.gaussian()};
        double norm = std::sqrt(s.norm2());
        for (auto& a : s.amps) a /= norm;
        StateVector out = run(c, s);
        EXPECT_LE(std::abs(out.norm2() - 1.0), 1e-9);
    }
}

// Permutation/phase kinds move basis states to signed basis states with no
// floating point error at all.
TEST(Invariants, PermutationPhaseGatesAreExactOnBasisStates) {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const uint32_t n = 2 + rng.below(4);
        Circuit c(n, Family::Fprime);
        for (int l = 0; l < 12; ++l) {
            Layer& layer = c.append_layer();
            const uint32_t a = rng.below(n), b = (a + 1 + rng.below(n - 1)) % n;
            switch (rng.below(5)) {
                case 0: layer.gates.push_back(Gate::x(a)); break;
                case 1: layer.gates.push_back(Gate::z(a)); break;
                case 2: layer.gates.push_back(Gate::cnot(a, b)); break;
                case 3: layer.gates.push_back(Gate::fanout(a, {b})); break;
                default: layer.gates.push_back(Gate::zfanout(a, {b})); break;
            }
        }
        StateVector out = run(c, basis_state(n, rng.below(size_t(1) << n)));
        int nonzero = 0;
        for (const auto& amp : out.amps) {
            if (amp == cplx{}) continue;
            ++nonzero;
            EXPECT_TRUE(amp == cplx{1.0} || amp == cplx{-1.0}) << amp;
        }
        EXPECT_EQ(nonzero, 1);
    }
}

TEST(Sparse, MatchesDenseOnRandomCircuits) {
    Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        const uint32_t n = 1 + rng.below(6);
        Circuit c = random_circuit(rng, n, 1 + rng.below(8), Family::Fprime);
        const uint64_t start = rng.below(size_t(1) << n);
        StateVector dense = run(c, basis_state(n, start));
        BasisKey key;
        for (uint32_t q = 0; q < n; ++q)
            if ((start >> q) & 1) key.set(q, true);
        SparseState sparse = run_sparse(c, SparseState::basis(n, key));
        EXPECT_LE(std::abs(sparse.norm2() - 1.0), 1e-9);
        StateVector back(n);
        for (const auto& [k, a] : sparse.entries) {
            size_t idx = 0;
            for (uint32_t q = 0; q < n; ++q)
                if (k.get(q)) idx |= size_t(1) << q;
            back.amps[idx] += a;
        }
        for (size_t z = 0; z < dense.dim(); ++z)
            ASSERT_LE(std::abs(back.amps[z] - dense.amps[z]), 1e-10);
    }
}

TEST(Sparse, GadgetRefApplication) {
    auto sub = std::make_shared<Circuit>(controlled_gadget(GateKind::H));
    Circuit c(2, Family::Fprime);
    c.append_layer().gates.push_back(Gate::gadget_ref(sub, {0, 1}));
    BasisKey key;
    key.set(0, true);
    SparseState out = run_sparse(c, SparseState::basis(2, key));
    ASSERT_EQ(out.entries.size(), 2u);
    for (const auto& [k, a] : out.entries) EXPECT_NEAR(std::abs(a), kInvSqrt2, kTol);
}

// ---------------------------------------------------------------------------
// specialize_classical
// ---------------------------------------------------------------------------

RegisterLayout simple_layout(uint32_t n_data, std::vector<uint32_t> enc,
                             std::vector<uint32_t> anc) {
    RegisterLayout l;
    l.data_begin = 0;
    l.data_count = n_data;
    l.encoding = std::move(enc);
    l.ancilla = std::move(anc);
    l.n_total = n_data + uint32_t(l.encoding.size() + l.ancilla.size());
    l.check_partition();
    return l;
}

TEST(Specialize, ControlBitGatesGateOnOff) {
    // template: CNOT(enc -> data0); enc=1 behaves as X, enc=0 as identity
    Circuit tmpl(2, Family::F);
    tmpl.append_layer().gates.push_back(Gate::cnot(1, 0));
    RegisterLayout layout = simple_layout(1, {1}, {});

    Encoding on = Encoding::zeros(1);
    on.bits[0] = 1;
    SpecializedCircuit s1 = specialize_classical(tmpl, layout, on);
    ASSERT_EQ(metrics(s1.circuit).size, 1u);
    EXPECT_TRUE(s1.circuit.layers[0].gates[0] == Gate::x(0));

    SpecializedCircuit s0 = specialize_classical(tmpl, layout, Encoding::zeros(1));
    EXPECT_EQ(metrics(s0.circuit).size, 0u);
    EXPECT_TRUE(s0.encoding_restored);
}

TEST(Specialize, XZXTripleBecomesClassicalPhase) {
    // X Z X on an encoding qubit contributes (-1)^(1-bit); with one ancilla
    // to carry the re-emitted phase.
    Circuit tmpl(2, Family::F);
    tmpl.append_layer().gates.push_back(Gate::x(0));
    tmpl.append_layer().gates.push_back(Gate::z(0));
    tmpl.append_layer().gates.push_back(Gate::x(0));
    RegisterLayout l;
    l.n_total = 2;
    l.data_begin = 1;
    l.data_count = 0;
    l.encoding = {0};
    l.ancilla = {1};

    SpecializedCircuit s = specialize_classical(tmpl, l, Encoding::zeros(1));
    EXPECT_TRUE(s.encoding_restored);
    SparseState out = run_sparse(s.circuit, SparseState::basis(1, BasisKey::zero()));
    ASSERT_EQ(out.entries.size(), 1u);
    EXPECT_NEAR(std::abs(out.entries[0].second + 1.0), 0.0, kTol);  // phase -1

    Encoding one = Encoding::zeros(1);
    one.bits[0] = 1;
    s = specialize_classical(tmpl, l, one);
    out = run_sparse(s.circuit, SparseState::basis(1, BasisKey::zero()));
    ASSERT_EQ(out.entries.size(), 1u);
    EXPECT_NEAR(std::abs(out.entries[0].second - 1.0), 0.0, kTol);  // phase +1
}

TEST(Specialize, RejectsHOnEncodingQubit) {
    Circuit tmpl(1, Family::F);
    tmpl.append_layer().gates.push_back(Gate::h(0));
    RegisterLayout l;
    l.n_total = 1;
    l.data_count = 0;
    l.encoding = {0};
    EXPECT_THROW(specialize_classical(tmpl, l, Encoding::zeros(1)), ClassicalityError);
}

TEST(Specialize, ZFanoutWithEncodingTargetsTurnsIntoZOnControl) {
    // zfanout(data0 -> enc) with enc bit 1: phase (-1)^{d}, i.e. Z on data0
    Circuit tmpl(2, Family::F);
    tmpl.append_layer().gates.push_back(Gate::zfanout(0, {1}));
    RegisterLayout layout = simple_layout(1, {1}, {});
    Encoding one = Encoding::zeros(1);
    one.bits[0] = 1;
    SpecializedCircuit s = specialize_classical(tmpl, layout, one);
    ASSERT_EQ(metrics(s.circuit).size, 1u);
    EXPECT_TRUE(s.circuit.layers[0].gates[0] == Gate::z(0));
}

// ---------------------------------------------------------------------------
// verify_encoding
// ---------------------------------------------------------------------------

TEST(Verify, EmptyTemplateMatchesEmptyCircuit) {
    Circuit tmpl(2, Family::F);
    RegisterLayout layout = simple_layout(2, {}, {});
    EquivalenceReport rep = verify_encoding(tmpl, layout, Encoding::zeros(0), Circuit(2),
                                            VerifyMode::AllBasis);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.trials, 4u);
    EXPECT_LE(rep.max_component_error, 1e-15);
}

TEST(Verify, DetectsWrongReference) {
    Circuit tmpl(2, Family::F);
    tmpl.append_layer().gates.push_back(Gate::cnot(1, 0));
    RegisterLayout layout = simple_layout(1, {1}, {});
    Encoding on = Encoding::zeros(1);
    on.bits[0] = 1;

    Circuit ref_x(1, Family::F);
    ref_x.append_layer().gates.push_back(Gate::x(0));
    EXPECT_TRUE(verify_encoding(tmpl, layout, on, ref_x, VerifyMode::AllBasis).pass);

    EquivalenceReport bad = verify_encoding(tmpl, layout, on, Circuit(1), VerifyMode::AllBasis);
    EXPECT_FALSE(bad.pass);
    EXPECT_GE(bad.max_component_error, 0.5);
}

TEST(Verify, RandomSuperpositionModeAgreesWithAllBasis) {
    // Random mode must never contradict all-basis mode (linearity).
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const uint32_t n = 1 + rng.below(3);
        Circuit ref = random_circuit(rng, n, 2, Family::F);
        // trivial template: the reference itself on the data register
        RegisterLayout layout = simple_layout(n, {}, {});
        EquivalenceReport all = verify_encoding(ref, layout, Encoding::zeros(0), ref,
                                                VerifyMode::AllBasis);
        EquivalenceReport rnd = verify_encoding(ref, layout, Encoding::zeros(0), ref,
                                                VerifyMode::RandomSuperposition, 5, 1234);
        EXPECT_TRUE(all.pass);
        EXPECT_TRUE(rnd.pass);
        EXPECT_EQ(rnd.trials, (1u << n) + 5u);
    }
}

TEST(Verify, DimensionMismatchThrows) {
    Circuit tmpl(2, Family::F);
    RegisterLayout layout = simple_layout(2, {}, {});
    EXPECT_THROW(verify_encoding(tmpl, layout, Encoding::zeros(0), Circuit(3),
                                 VerifyMode::AllBasis),
                 DimensionError);
}

TEST(Verify, MachineRecordIsOneLine) {
    EquivalenceReport rep;
    rep.pass = true;
    std::string line = rep.machine_record();
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_NE(line.find("pass=1"), std::string::npos);
}

}  // namespace
