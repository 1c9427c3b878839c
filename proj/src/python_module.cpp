#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsi/classification.hpp"
#include "gsi/enumeration.hpp"
#include "gsi/even_frobenius.hpp"
#include "gsi/gluing.hpp"
#include "gsi/semigroup.hpp"

namespace py = pybind11;
using namespace gsi;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroups: gluings, gap sets, classification and GSI catalogs";

  py::register_exception<Error>(m, "SemigroupError");

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init([](const std::vector<Int>& gens) {
             return NumericalSemigroup::from_generators(gens);
           }),
           py::arg("generators"))
      .def_property_readonly("minimal_generators", &NumericalSemigroup::minimal_generators)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("conductor", &NumericalSemigroup::conductor)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
      .def_property_readonly("max_generator", &NumericalSemigroup::max_generator)
      .def_property_readonly("is_naturals", &NumericalSemigroup::is_naturals)
      .def("contains", &NumericalSemigroup::contains, py::arg("n"))
      .def("__contains__", &NumericalSemigroup::contains)
      .def("gaps", &NumericalSemigroup::gaps)
      .def("apery_set", &NumericalSemigroup::apery_set, py::arg("n"))
      .def("__repr__", &NumericalSemigroup::to_string)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
      .def("__lt__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a < b; })
      .def("__hash__", [](const NumericalSemigroup& s) {
        std::size_t h = 0;
        for (Int g : s.minimal_generators()) h = h * 1000003 + static_cast<std::size_t>(g);
        return h;
      });

  m.def("naturals", [] { return NumericalSemigroup::naturals(); });
  m.def("frobenius_two_generators", &frobenius_two_generators, py::arg("a"), py::arg("b"));
  m.def("parse_generators", &parse_generators, py::arg("text"));

  py::class_<CharacteristicSequenceReport>(m, "CharacteristicSequenceReport")
      .def_readonly("sequence", &CharacteristicSequenceReport::sequence)
      .def_readonly("e", &CharacteristicSequenceReport::e)
      .def_readonly("n", &CharacteristicSequenceReport::n)
      .def_readonly("cs1_ok", &CharacteristicSequenceReport::cs1_ok)
      .def_readonly("cs2_ok", &CharacteristicSequenceReport::cs2_ok)
      .def_readonly("conductor_formula", &CharacteristicSequenceReport::conductor_formula);

  py::class_<GluingSpec>(m, "GluingSpec")
      .def_readonly("base", &GluingSpec::base)
      .def_readonly("d", &GluingSpec::d)
      .def_readonly("gamma", &GluingSpec::gamma)
      .def_readonly("is_gsi", &GluingSpec::is_gsi)
      .def("__repr__", [](const GluingSpec& s) {
        return s.base.to_string() + " (+)_{" + std::to_string(s.d) + "," +
               std::to_string(s.gamma) + "} N";
      });

  m.def("make_gluing_spec", &make_gluing_spec, py::arg("base"), py::arg("d"), py::arg("gamma"));
  m.def("validate_gsi", &validate_gsi, py::arg("spec"));
  m.def("glue", py::overload_cast<const NumericalSemigroup&, Int, Int>(&glue), py::arg("base"),
        py::arg("d"), py::arg("gamma"));
  m.def("glue_spec", py::overload_cast<const GluingSpec&>(&glue), py::arg("spec"));

  py::class_<GsiGapPartition>(m, "GsiGapPartition")
      .def_readonly("initial_lo", &GsiGapPartition::initial_lo)
      .def_readonly("initial_hi", &GsiGapPartition::initial_hi)
      .def_readonly("middle", &GsiGapPartition::middle)
      .def_readonly("a_blocks", &GsiGapPartition::a_blocks)
      .def_readonly("b_blocks", &GsiGapPartition::b_blocks)
      .def("flatten", &GsiGapPartition::flatten)
      .def("total_size", &GsiGapPartition::total_size);

  m.def("gsi_gaps", &gsi_gaps, py::arg("spec"));
  m.def("gsi_frobenius", &gsi_frobenius, py::arg("spec"));
  m.def("gsi_genus", &gsi_genus, py::arg("spec"));

  m.def("analyze_characteristic_sequence", &analyze_characteristic_sequence, py::arg("sequence"));
  m.def("is_strongly_increasing", &is_strongly_increasing, py::arg("s"));
  m.def("reorder_characteristic", &reorder_characteristic, py::arg("sequence"));
  m.def("is_gsi", &is_gsi, py::arg("s"));
  m.def("is_si_by_gluing", &is_si_by_gluing, py::arg("s"));
  m.def("is_telescopic", &is_telescopic, py::arg("s"));
  m.def("is_free", &is_free, py::arg("s"));
  m.def("is_complete_intersection", &is_complete_intersection, py::arg("s"));

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_readonly("si", &ClassificationReport::si)
      .def_readonly("gsi", &ClassificationReport::gsi)
      .def_readonly("telescopic", &ClassificationReport::telescopic)
      .def_readonly("free", &ClassificationReport::free)
      .def_readonly("complete_intersection", &ClassificationReport::complete_intersection)
      .def_readonly("si_witness", &ClassificationReport::si_witness)
      .def_readonly("gsi_witness", &ClassificationReport::gsi_witness);

  m.def("classify", &classify, py::arg("s"));

  m.def("semigroups_with_frobenius", &semigroups_with_frobenius, py::arg("k"));

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("gens", &CatalogEntry::gens)
      .def_readonly("base_gens", &CatalogEntry::base_gens)
      .def_readonly("d", &CatalogEntry::d)
      .def_readonly("gamma", &CatalogEntry::gamma)
      .def_readonly("frobenius", &CatalogEntry::frobenius);

  py::class_<GsiCatalog>(m, "GsiCatalog")
      .def_readonly("bound", &GsiCatalog::bound)
      .def_readonly("entries", &GsiCatalog::entries)
      .def("total", &GsiCatalog::total);

  m.def("enumerate_gsi_up_to", &enumerate_gsi_up_to, py::arg("f"), py::arg("jobs") = 1);

  py::class_<CatalogStats>(m, "CatalogStats")
      .def_readonly("total", &CatalogStats::total)
      .def_readonly("per_frobenius", &CatalogStats::per_frobenius)
      .def_readonly("per_embedding_dimension", &CatalogStats::per_embedding_dimension);

  m.def("catalog_stats", &catalog_stats, py::arg("catalog"));

  m.def("s_family", &s_family, py::arg("f"));

  py::class_<EvenBounds>(m, "EvenBounds")
      .def_readonly("f", &EvenBounds::f)
      .def_readonly("seed_frobenius_max", &EvenBounds::seed_frobenius_max)
      .def("d_max", &EvenBounds::d_max, py::arg("t"))
      .def("gamma", &EvenBounds::gamma, py::arg("t"), py::arg("d"));

  m.def("even_bounds", &even_bounds, py::arg("f"));
  m.def("find_gsi_with_even_frobenius", &find_gsi_with_even_frobenius, py::arg("f"));
  m.def("find_all_gsi_with_even_frobenius", &find_all_gsi_with_even_frobenius, py::arg("f"));
  m.def("realizable_even_scan", &realizable_even_scan, py::arg("bound"), py::arg("jobs") = 1);
  m.def("evens_from_seed", &evens_from_seed, py::arg("seed"), py::arg("d"), py::arg("bound"));
  m.def("evens_reachable_from_frobenius", &evens_reachable_from_frobenius, py::arg("t"),
        py::arg("bound"));
  m.def("evens_with_gamma_floor", &evens_with_gamma_floor, py::arg("t"), py::arg("gamma_floor"),
        py::arg("bound"));
}
