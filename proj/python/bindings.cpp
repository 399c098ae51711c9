#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "imprim/continuum.hpp"
#include "imprim/mackey.hpp"
#include "imprim/serialize.hpp"

namespace py = pybind11;
using namespace imprim;

namespace {

std::vector<Complex> to_function(const GroupPtr& g, const std::vector<Complex>& f) {
  if (static_cast<int>(f.size()) != g->order())
    fail("DimensionMismatch", "function is not defined on all of G");
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Induced representations, covariant observables and generalized "
            "wavelet frames on finite groups";

  py::register_exception<Error>(m, "Error");

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "FiniteGroup")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("name", &FiniteGroup::name)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("generating_set", &FiniteGroup::generating_set)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<FiniteGroup " + g.name() + " order " + std::to_string(g.order()) + ">";
      });

  m.def("catalog", &catalog, py::arg("name"));
  m.def("catalog_names", &catalog_names);
  m.def("group_from_cayley", &FiniteGroup::from_cayley, py::arg("table"),
        py::arg("name") = "group");

  py::class_<Subgroup>(m, "Subgroup")
      .def_readonly("parent", &Subgroup::parent)
      .def_readonly("elements", &Subgroup::elements)
      .def_readonly("group", &Subgroup::group)
      .def_property_readonly("order", &Subgroup::order)
      .def("to_sub", &Subgroup::to_sub)
      .def("contains", &Subgroup::contains);

  m.def("subgroup_from_generators", &subgroup_from_generators);
  m.def("trivial_subgroup", &trivial_subgroup);
  m.def("full_subgroup", &full_subgroup);
  m.def("center_subgroup", &center_subgroup);
  m.def("all_subgroups", &all_subgroups, py::arg("group"), py::arg("max_gens") = 2);
  m.def("subgroup_class_representatives", &subgroup_class_representatives,
        py::arg("group"), py::arg("max_gens") = 2);

  py::class_<CosetSpace>(m, "CosetSpace")
      .def_readonly("reps", &CosetSpace::reps)
      .def_readonly("proj", &CosetSpace::proj)
      .def_property_readonly("size", &CosetSpace::size)
      .def_property_readonly("base_point", &CosetSpace::base_point)
      .def("action", &CosetSpace::action)
      .def("cocycle", &CosetSpace::cocycle);

  m.def("coset_space", &coset_space);

  py::class_<UnitaryRep>(m, "UnitaryRep")
      .def_readonly("group", &UnitaryRep::group)
      .def_readonly("dim", &UnitaryRep::dim)
      .def_readonly("matrices", &UnitaryRep::mats)
      .def("at", &UnitaryRep::at, py::return_value_policy::copy);

  py::class_<RepReport>(m, "RepReport")
      .def_readonly("unitarity_residual", &RepReport::unitarity_residual)
      .def_readonly("homomorphism_residual", &RepReport::homomorphism_residual)
      .def_readonly("identity_residual", &RepReport::identity_residual)
      .def_readonly("pass_", &RepReport::pass);

  m.def("validate_rep", &validate_rep, py::arg("rep"), py::arg("tol") = kDefaultTol);
  m.def("trivial_rep", &trivial_rep, py::arg("group"), py::arg("dim") = 1);
  m.def("left_regular", &left_regular);
  m.def("restrict_rep", &restrict_rep);
  m.def("pi_of_f",
        [](const UnitaryRep& rep, const std::vector<Complex>& f) {
          return pi_of_f(rep, to_function(rep.group, f));
        });
  m.def("intertwiner_space", &intertwiner_space, py::arg("pi1"), py::arg("pi2"),
        py::arg("tol") = kDefaultTol);
  m.def("hom_dimension", &hom_dimension, py::arg("pi1"), py::arg("pi2"),
        py::arg("tol") = kDefaultTol);
  m.def("equivalence_unitary", &equivalence_unitary, py::arg("pi1"), py::arg("pi2"),
        py::arg("tol") = kDefaultTol);
  m.def("irreducibles", &irreducibles, py::arg("group"), py::arg("seed") = 7,
        py::arg("tol") = kDefaultTol);
  m.def(
      "decompose_rep",
      [](const UnitaryRep& rep, std::uint64_t seed, double tol) {
        const Decomposition dec = decompose_rep(rep, seed, tol);
        py::list classes;
        for (const auto& [irrep, mult] : dec.classes)
          classes.append(py::make_tuple(irrep, mult));
        return classes;
      },
      py::arg("rep"), py::arg("seed") = 7, py::arg("tol") = kDefaultTol);

  py::class_<ThetaWeight>(m, "ThetaWeight")
      .def_readonly("values", &ThetaWeight::values)
      .def_readonly("subgroup", &ThetaWeight::sub);

  m.def("theta_uniform", &theta_uniform);
  m.def("theta_random", &theta_random);
  m.def("weil_average", [](const CosetSpace& x, const std::vector<Complex>& f) {
    return weil_average(x, to_function(x.parent, f));
  });

  py::class_<InducedRep>(m, "InducedRep")
      .def_readonly("rep", &InducedRep::rep)
      .def_readonly("sigma", &InducedRep::sigma)
      .def_readonly("space", &InducedRep::space)
      .def_readonly("theta", &InducedRep::theta)
      .def_property_readonly("block_dim", &InducedRep::block_dim)
      .def_property_readonly("blocks", &InducedRep::blocks);

  m.def("induce", &induce);
  m.def("theta_gram", &theta_gram);
  m.def("vector_f_fv",
        [](const InducedRep& ind, const std::vector<Complex>& f, const Vector& v) {
          return vector_f_fv(ind, to_function(ind.space.parent, f), v);
        });
  m.def("conv_action",
        [](const InducedRep& ind, const std::vector<Complex>& f, const Vector& big_f) {
          return conv_action(ind, to_function(ind.space.parent, f), big_f);
        });

  py::class_<AdmissibleMap>(m, "AdmissibleMap")
      .def(py::init([](const Matrix& a, const UnitaryRep& pi, const UnitaryRep& sigma,
                       const Subgroup& sub, const ThetaWeight& theta) {
             return AdmissibleMap{a, pi, sigma, sub, theta};
           }),
           py::arg("a"), py::arg("pi"), py::arg("sigma"), py::arg("sub"),
           py::arg("theta"))
      .def_readwrite("a", &AdmissibleMap::a)
      .def_readonly("pi", &AdmissibleMap::pi)
      .def_readonly("sigma", &AdmissibleMap::sigma)
      .def_readonly("sub", &AdmissibleMap::sub)
      .def_readonly("theta", &AdmissibleMap::theta);

  py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
      .def_readonly("semi_residual", &AdmissibilityReport::semi_residual)
      .def_readonly("beta", &AdmissibilityReport::beta)
      .def_readonly("pass_", &AdmissibilityReport::pass);

  m.def("check_admissible", &check_admissible, py::arg("a"),
        py::arg("tol") = kDefaultTol);
  m.def("frame_operator", &frame_operator);
  m.def("wavelet_operator",
        [](const AdmissibleMap& a, double tol) {
          const WaveletOp op = wavelet_operator(a, tol);
          return py::make_tuple(op.w, op.ind);
        },
        py::arg("a"), py::arg("tol") = kDefaultTol);
  m.def("frame_bounds", &frame_bounds);
  m.def("is_tight", &is_tight, py::arg("a"), py::arg("tol") = kDefaultTol);
  m.def("tighten", &tighten, py::arg("a"), py::arg("tol") = kDefaultTol);
  m.def("admissible_from_intertwiner", &admissible_from_intertwiner, py::arg("w"),
        py::arg("pi"), py::arg("ind"), py::arg("tol") = kDefaultTol);
  m.def(
      "square_integrable_mod",
      [](const UnitaryRep& pi, const Subgroup& h, const UnitaryRep& sigma,
         std::uint64_t seed, double tol) {
        const SquareIntegrability sq = square_integrable_mod(pi, h, sigma, seed, tol);
        return py::make_tuple(sq.verdict,
                              sq.witness ? py::cast(*sq.witness) : py::none(),
                              sq.multiplicities);
      },
      py::arg("pi"), py::arg("h"), py::arg("sigma"), py::arg("seed") = 7,
      py::arg("tol") = kDefaultTol);

  py::class_<Povm>(m, "Povm")
      .def_readonly("space", &Povm::space)
      .def_readonly("pi", &Povm::pi)
      .def_readonly("atoms", &Povm::atoms)
      .def("total", &Povm::total);

  py::class_<PovmReport>(m, "PovmReport")
      .def_readonly("min_atom_eigenvalue", &PovmReport::min_atom_eigenvalue)
      .def_readonly("total_min_eigenvalue", &PovmReport::total_min_eigenvalue)
      .def_readonly("covariance_residual", &PovmReport::covariance_residual)
      .def_readonly("pass_", &PovmReport::pass);

  m.def("validate_povm", &validate_povm, py::arg("e"), py::arg("tol") = kDefaultTol);
  m.def("is_normalized", &is_normalized, py::arg("e"), py::arg("tol") = kDefaultTol);
  m.def("is_projective", &is_projective, py::arg("e"), py::arg("tol") = kDefaultTol);
  m.def("normalize", &normalize, py::arg("e"), py::arg("tol") = kDefaultTol);
  m.def("canonical_povm", &canonical_povm);
  m.def(
      "compress_povm",
      [](const InducedRep& ind, const Matrix& t, double tol) {
        const CompressedSystem sys = compress_povm(ind, t, tol);
        return py::make_tuple(sys.povm, sys.carrier);
      },
      py::arg("ind"), py::arg("t"), py::arg("tol") = kDefaultTol);
  m.def(
      "random_covariant_povm",
      [](const InducedRep& ind, std::uint64_t seed, double tol) {
        return random_covariant_povm(ind, seed, tol).povm;
      },
      py::arg("ind"), py::arg("seed"), py::arg("tol") = kDefaultTol);
  m.def("povm_from_admissible", &povm_from_admissible, py::arg("a"),
        py::arg("tol") = kDefaultTol);
  m.def(
      "systems_equivalent",
      [](const Povm& e1, const Povm& e2, double tol) {
        const EquivalenceResult result = systems_equivalent(e1, e2, tol);
        const char* verdict = result.verdict == Equivalence::Equivalent
                                  ? "equivalent"
                                  : (result.verdict == Equivalence::Inequivalent
                                         ? "inequivalent"
                                         : "undetermined");
        return py::make_tuple(verdict,
                              result.unitary ? py::cast(*result.unitary) : py::none());
      },
      py::arg("e1"), py::arg("e2"), py::arg("tol") = kDefaultTol);

  py::class_<MackeyResult>(m, "MackeyResult")
      .def_readonly("sigma_e", &MackeyResult::sigma_e)
      .def_readonly("a_map", &MackeyResult::a_map)
      .def_readonly("w", &MackeyResult::w)
      .def_readonly("e_of_x", &MackeyResult::e_of_x)
      .def_readonly("ind", &MackeyResult::ind)
      .def_property_readonly("residuals", [](const MackeyResult& r) {
        py::dict d;
        d["uno"] = r.residuals.uno;
        d["due"] = r.residuals.due;
        d["isometry"] = r.residuals.isometry;
        d["tre_rank"] = r.residuals.tre_rank;
        d["tre_expected"] = r.residuals.tre_expected;
        return d;
      });

  m.def("m_of_f", [](const Povm& e, const std::vector<Complex>& f) {
    return m_of_f(e, to_function(e.pi.group, f));
  });
  m.def("phi_form", &phi_form);
  m.def(
      "extract",
      [](const Povm& e, double tol) { return extract(e, tol); },
      py::arg("e"), py::arg("tol") = kDefaultTol);
  m.def(
      "projectivity_check",
      [](const MackeyResult& result, const Povm& e, double tol) {
        const ProjectivityReport report = projectivity_check(result, e, tol);
        return py::make_tuple(report.projective, report.wa_unitary);
      },
      py::arg("result"), py::arg("e"), py::arg("tol") = kDefaultTol);
  m.def(
      "torus_fixture",
      [](int n) {
        const TorusFixture fx = torus_fixture(n);
        py::dict d;
        d["group"] = fx.group;
        d["pi"] = fx.pi;
        d["e"] = fx.e;
        d["e_prime"] = fx.e_prime;
        d["orientation_flipped"] = fx.orientation_flipped;
        d["printed_orientation_residual"] = fx.printed_orientation_residual;
        d["e_projective"] = fx.e_projective;
        d["offdiag_scale"] = fx.offdiag_scale;
        return d;
      },
      py::arg("n") = 8);

  // Numeric demos.
  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init<int, double, double>(), py::arg("n"), py::arg("dt"), py::arg("t0"))
      .def_readonly("n", &TimeGrid::n)
      .def_readonly("dt", &TimeGrid::dt)
      .def_readonly("t0", &TimeGrid::t0);

  py::class_<SampledSignal>(m, "SampledSignal")
      .def(py::init([](const Vector& samples, double dt, double t0) {
             return SampledSignal{samples, dt, t0};
           }),
           py::arg("samples"), py::arg("dt"), py::arg("t0"))
      .def_readwrite("samples", &SampledSignal::samples)
      .def_readonly("dt", &SampledSignal::dt)
      .def_readonly("t0", &SampledSignal::t0);

  py::class_<WaveletSpec>(m, "WaveletSpec")
      .def_readonly("samples", &WaveletSpec::samples)
      .def_readonly("dt", &WaveletSpec::dt)
      .def_readonly("t0", &WaveletSpec::t0);

  py::class_<CwtGrid>(m, "CwtGrid")
      .def_readonly("scales", &CwtGrid::scales)
      .def_readonly("translations", &CwtGrid::translations)
      .def_readonly("version", &CwtGrid::version)
      .def("haar_weight", &CwtGrid::haar_weight);

  py::class_<StftGrid>(m, "StftGrid")
      .def_readonly("nx", &StftGrid::nx)
      .def_readonly("nw", &StftGrid::nw)
      .def_readonly("version", &StftGrid::version);

  m.def("reference_time_grid", &reference_time_grid);
  m.def("reference_cwt_grid", &reference_cwt_grid);
  m.def("reference_wavelet", &reference_wavelet);
  m.def("reference_chirp", &reference_chirp);
  m.def("reference_stft_grid", &reference_stft_grid);
  m.def("gaussian_window", &gaussian_window);
  m.def("sample_wavelet", &sample_wavelet);
  m.def("signal_energy", &signal_energy);
  m.def("admissibility_constant", &admissibility_constant, py::arg("psi"),
        py::arg("tol") = kDefaultTol);
  m.def("cwt_forward", &cwt_forward);
  m.def("cwt_inverse", &cwt_inverse);
  m.def(
      "cwt_energy_report",
      [](const SampledSignal& u, const WaveletSpec& psi, const CwtGrid& grid) {
        const EnergyReport r = cwt_energy_report(u, psi, grid);
        py::dict d;
        d["constant"] = r.constant;
        d["energy_lhs"] = r.lhs;
        d["energy_rhs"] = r.rhs;
        d["rel_err"] = r.rel_err;
        d["grid_version"] = r.grid_version;
        return d;
      });
  m.def("stft_isometry_check",
        [](const SampledSignal& u, const SampledSignal& g, const StftGrid& grid) {
          const IsometryReport r = stft_isometry_check(u, g, grid);
          py::dict d;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["rel_err"] = r.rel_err;
          d["grid_version"] = r.grid_version;
          return d;
        });

  m.attr("DEFAULT_TOL") = kDefaultTol;
  m.attr("__version__") = "0.1.0";
}
