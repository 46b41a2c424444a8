#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccstats/curve.hpp"
#include "ccstats/distribution.hpp"
#include "ccstats/errors.hpp"
#include "ccstats/family.hpp"
#include "ccstats/zeta.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace ccstats;

namespace {

py::object to_py_int(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::object to_py_fraction(const BigRat& value) {
    return py::module_::import("fractions").attr("Fraction")(rat_string(value));
}

BigRat from_py_rational(const py::object& value) {
    return rat_parse(py::str(value).cast<std::string>());
}

py::dict table_to_dict(const DistributionTable& table) {
    py::dict out;
    if (table.is_empirical()) {
        for (const auto& [k, count] : table.counts()) out[py::int_(k)] = to_py_int(count);
    } else {
        for (const auto& [k, mass] : table.masses()) out[py::int_(k)] = to_py_fraction(mass);
    }
    return out;
}

Weight weight_from_list(const std::vector<int>& entries) { return Weight(entries); }

}  // namespace

PYBIND11_MODULE(_ccstats, m) {
    m.doc() = "exact point-count statistics for affine cyclic covers y^m = f(x) "
              "over small finite fields";

    py::register_exception<UnsupportedError>(m, "UnsupportedError");

    py::class_<Field, std::shared_ptr<Field>>(m, "Field")
        .def(py::init([](std::uint32_t p, std::uint32_t e) {
                 return std::make_shared<Field>(Field::make(p, e));
             }),
             py::arg("p"), py::arg("e") = 1)
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("e", &Field::e)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("modulus", &Field::modulus)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("div", &Field::div)
        .def("inv", &Field::inv)
        .def("pow", &Field::pow)
        .def("__repr__", [](const Field& f) {
            return "Field(p=" + std::to_string(f.p()) + ", e=" + std::to_string(f.e()) + ")";
        });

    py::class_<PowerClassifier>(m, "PowerClassifier")
        .def(py::init<const Field&, std::uint32_t>(), py::arg("field"), py::arg("m"),
             py::keep_alive<1, 2>())
        .def_property_readonly("m", &PowerClassifier::m)
        .def_property_readonly("sigma", &PowerClassifier::sigma)
        .def_property_readonly("power_count", &PowerClassifier::power_count)
        .def("is_mth_power", &PowerClassifier::is_mth_power);

    py::class_<Poly>(m, "Poly")
        .def(py::init<const Field&, std::vector<Elem>>(), py::arg("field"),
             py::arg("coeffs"), py::keep_alive<1, 2>())
        .def_property_readonly("coeffs", &Poly::coeffs)
        .def_property_readonly("degree", &Poly::degree)
        .def("is_zero", &Poly::is_zero)
        .def("is_monic", &Poly::is_monic)
        .def("eval", &Poly::eval)
        .def("derivative", &Poly::derivative)
        .def("monic", &Poly::monic)
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", &Poly::to_text)
        .def("__repr__", [](const Poly& f) { return "Poly(" + f.to_text() + ")"; })
        .def_static("from_text", &Poly::from_text, py::keep_alive<0, 1>());

    m.def("poly_gcd", &poly_gcd);
    m.def("is_squarefree", &is_squarefree);

    py::class_<PowerFreeDecomposition>(m, "PowerFreeDecomposition")
        .def_readonly("unit", &PowerFreeDecomposition::unit)
        .def_readonly("bound", &PowerFreeDecomposition::bound)
        .def_readonly("parts", &PowerFreeDecomposition::parts)
        .def("reassemble", &PowerFreeDecomposition::reassemble)
        .def("weighted_degree", [](const PowerFreeDecomposition& d,
                                   const std::vector<int>& weight) {
            return weighted_degree(d, weight_from_list(weight));
        });

    py::class_<NotPowerFree>(m, "NotPowerFree")
        .def_readonly("factor", &NotPowerFree::factor)
        .def_readonly("multiplicity", &NotPowerFree::multiplicity);

    m.def("squarefree_decompose", [](const Poly& f) {
        py::list out;
        for (const auto& part : squarefree_decompose(f))
            out.append(py::make_tuple(part.part, part.multiplicity));
        return out;
    });

    m.def("powerfree_decompose", [](const Poly& f, int n) -> py::object {
        auto outcome = powerfree_decompose(f, n);
        if (auto* decomp = std::get_if<PowerFreeDecomposition>(&outcome))
            return py::cast(std::move(*decomp));
        return py::cast(std::get<NotPowerFree>(std::move(outcome)));
    });

    m.def("is_powerfree", &is_powerfree);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def(py::init([](const Field& field, int n, const std::vector<int>& weights, int d,
                         bool monic) {
                 return FamilySpec(field, n, weight_from_list(weights), d, monic);
             }),
             py::arg("field"), py::arg("n"), py::arg("weights"), py::arg("d"),
             py::arg("monic") = true, py::keep_alive<1, 2>())
        .def_property_readonly("n", &FamilySpec::n)
        .def_property_readonly("degree", &FamilySpec::degree)
        .def_property_readonly("monic", &FamilySpec::monic)
        .def_property_readonly("weights",
                               [](const FamilySpec& s) { return s.weight().entries(); })
        .def("is_member", &FamilySpec::is_member);

    m.def("count_squarefree",
          [](const Field& f, int d) { return to_py_int(count_squarefree(f, d)); });
    m.def("count_powerfree",
          [](const Field& f, int d, int n) { return to_py_int(count_powerfree(f, d, n)); });
    m.def("count_family",
          [](const FamilySpec& spec) { return to_py_int(count_family(spec)); });
    m.def("enumerate_family", [](const FamilySpec& spec) { return enumerate_family(spec); });
    m.def(
        "count_constrained",
        [](const FamilySpec& spec, const std::vector<Elem>& points,
           const std::vector<Elem>& values, int jobs) {
            return to_py_int(count_constrained(
                spec, ValueConstraint(spec.field(), points, values), jobs));
        },
        py::arg("spec"), py::arg("points"), py::arg("values"), py::arg("jobs") = 1);
    m.def(
        "predicted_constrained_count",
        [](const FamilySpec& spec, std::size_t r, const std::string& theorem) {
            PredictionTheorem t;
            if (theorem == "theorem-c")
                t = PredictionTheorem::kQuarticWeight;
            else if (theorem == "nfree")
                t = PredictionTheorem::kPowerFreePlainDegree;
            else
                throw std::invalid_argument("theorem must be theorem-c or nfree");
            return to_py_fraction(predicted_constrained_count(spec, r, t));
        },
        py::arg("spec"), py::arg("r"), py::arg("theorem"));
    m.def(
        "sample_family",
        [](const FamilySpec& spec, long long count, std::uint64_t seed, int jobs) {
            SampleConfig cfg;
            cfg.count = count;
            cfg.seed = seed;
            cfg.jobs = jobs;
            return sample_family(spec, cfg);
        },
        py::arg("spec"), py::arg("count"), py::arg("seed"), py::arg("jobs") = 1);

    m.def("key_bijection", &key_bijection);
    m.def("key_bijection_inverse", [](const Poly& t1, const Poly& t2) {
        auto [f1, f2, f3] = key_bijection_inverse(t1, t2);
        return py::make_tuple(std::move(f1), std::move(f2), std::move(f3));
    });
    m.def("tilde_expand", [](const std::vector<long long>& exponents,
                             const std::vector<Poly>& components) {
        if (exponents.size() != 3)
            throw std::invalid_argument("tilde_expand needs 3 exponents");
        if (components.size() != 7)
            throw std::invalid_argument("tilde_expand needs 7 components");
        const std::array<long long, 3> e{exponents[0], exponents[1], exponents[2]};
        const std::array<Poly, 7> c{components[0], components[1], components[2],
                                    components[3], components[4], components[5],
                                    components[6]};
        const auto out = tilde_expand(e, c);
        return std::vector<long long>(out.begin(), out.end());
    });

    py::class_<CurveSpec>(m, "CurveSpec")
        .def(py::init<const Poly&, const PowerClassifier&>(), py::arg("f"),
             py::arg("classifier"), py::keep_alive<1, 3>())
        .def_property_readonly("m", &CurveSpec::m)
        .def_readonly("f", &CurveSpec::f);

    m.def("fiber_size", &fiber_size);
    m.def("count_points", &count_points);
    m.def("fiber_profile", [](const CurveSpec& curve) {
        const auto profile = fiber_profile(curve);
        return py::make_tuple(profile.k0, profile.k1, profile.ksigma);
    });

    m.def(
        "genus",
        [](const PowerFreeDecomposition& decomp, int m, const Field& field) {
            const auto rep = genus(decomp, m, field);
            py::dict out;
            out["genus"] = rep.genus;
            out["coprime_characteristic"] = rep.coprime_characteristic;
            out["residue_condition"] = rep.residue_condition;
            out["valid_hypotheses"] = rep.valid_hypotheses;
            out["degree"] = rep.poly_degree;
            out["infinity_term"] = rep.infinity_term;
            py::list branches;
            for (const auto& b : rep.branch_data)
                branches.append(py::make_tuple(b.multiplicity, b.part_degree, b.contribution));
            out["branch_data"] = branches;
            return out;
        },
        py::arg("decomp"), py::arg("m"), py::arg("field"));
    m.def("genus_weight",
          [](int m, int n) { return genus_weight(m, n).entries(); });

    // fiber-sum limit models and tables
    py::class_<RVModel>(m, "RVModel")
        .def_readonly("q", &RVModel::q)
        .def_readonly("m", &RVModel::m)
        .def_readonly("sigma", &RVModel::sigma)
        .def_property_readonly("psi", [](const RVModel& rv) { return to_py_fraction(rv.psi); })
        .def_property_readonly("p0", [](const RVModel& rv) { return to_py_fraction(rv.p0); })
        .def_property_readonly("p1", [](const RVModel& rv) { return to_py_fraction(rv.p1); })
        .def_property_readonly("psigma",
                               [](const RVModel& rv) { return to_py_fraction(rv.psigma); })
        .def_property_readonly("source",
                               [](const RVModel& rv) { return rv_source_name(rv.source); })
        .def("mean", [](const RVModel& rv) { return to_py_fraction(rv.mean()); });

    m.def(
        "rv_from_psi",
        [](int q, int m, const py::object& psi) {
            return RVModel::from_psi(q, m, from_py_rational(psi));
        },
        py::arg("q"), py::arg("m"), py::arg("psi"));
    m.def("rv_quartic_weight", &RVModel::quartic_weight, py::arg("q"), py::arg("m"),
          py::arg("N"));
    m.def(
        "rv_general_weight",
        [](int q, int m, const std::vector<int>& weights) {
            return RVModel::general_weight(q, m, weight_from_list(weights));
        },
        py::arg("q"), py::arg("m"), py::arg("weights"));
    m.def("rv_squarefree_family", &RVModel::squarefree_family, py::arg("q"), py::arg("m"));
    m.def("rv_fixed_profile", &RVModel::fixed_profile, py::arg("q"), py::arg("m"),
          py::arg("l"));
    m.def("rv_powerfree_family", &RVModel::powerfree_family, py::arg("q"), py::arg("m"),
          py::arg("n"));

    m.def("convolve", [](const RVModel& rv, int copies) {
        return table_to_dict(convolve(rv, copies));
    });
    m.def(
        "empirical_distribution",
        [](const FamilySpec& spec, const PowerClassifier& cls, int jobs) {
            return table_to_dict(empirical_distribution(spec, cls, jobs));
        },
        py::arg("spec"), py::arg("classifier"), py::arg("jobs") = 1);
    m.def(
        "empirical_distribution_mc",
        [](const FamilySpec& spec, const PowerClassifier& cls, long long count,
           std::uint64_t seed, int jobs) {
            SampleConfig cfg;
            cfg.count = count;
            cfg.seed = seed;
            cfg.jobs = jobs;
            return table_to_dict(empirical_distribution_mc(spec, cls, cfg));
        },
        py::arg("spec"), py::arg("classifier"), py::arg("count"), py::arg("seed"),
        py::arg("jobs") = 1);

    // zeta sums over the affine line
    m.def("zeta_closed", [](const Field& field, int s) {
        return to_py_fraction(zeta_closed(field, s));
    });
    m.def(
        "restricted_sqfree_closed",
        [](const Field& field, int t, const std::vector<Elem>& excluded) {
            return to_py_fraction(
                restricted_sqfree_closed(field, ZetaQuery(field, t, excluded, 0)));
        },
        py::arg("field"), py::arg("t"), py::arg("excluded") = std::vector<Elem>{});
    m.def(
        "restricted_sqfree_partial",
        [](const Field& field, int t, const std::vector<Elem>& excluded, int truncation) {
            return to_py_fraction(
                restricted_sqfree_partial(field, ZetaQuery(field, t, excluded, truncation)));
        },
        py::arg("field"), py::arg("t"), py::arg("excluded"), py::arg("truncation"));
    m.def(
        "restricted_sqfree_counts",
        [](const Field& field, std::size_t r, int max_d) {
            py::list out;
            for (const auto& c : restricted_sqfree_counts(field, r, max_d))
                out.append(to_py_int(c));
            return out;
        },
        py::arg("field"), py::arg("r"), py::arg("max_d"));
    m.def("tail_bound", [](const Field& field, int t, int D) {
        return to_py_fraction(tail_bound(field, t, D));
    });
}
