#include "gsi/render.hpp"

#include <sstream>

#include "json.hpp"

namespace gsi {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json gens_json(const std::vector<Int>& gens) { return ordered_json(gens); }

std::string gens_plain(const std::vector<Int>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(gens[i]);
  }
  return out;
}

ordered_json semigroup_json(const NumericalSemigroup& s) {
  ordered_json j;
  j["gens"] = gens_json(s.minimal_generators());
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["multiplicity"] = s.multiplicity();
  return j;
}

ordered_json spec_json(const GluingSpec& spec) {
  ordered_json j;
  j["base_gens"] = gens_json(spec.base.minimal_generators());
  j["d"] = spec.d;
  j["gamma"] = spec.gamma;
  return j;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  raise(Errc::bad_input, "unknown format '" + name + "' (expected table, json or csv)");
}

std::string angle_brackets(const std::vector<Int>& gens) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(gens[i]);
  }
  out += "⟩";
  return out;
}

std::string render_analysis(const NumericalSemigroup& s, const ClassificationReport& r, Format f) {
  if (f == Format::json) {
    ordered_json j = semigroup_json(s);
    j["embedding_dimension"] = s.embedding_dimension();
    j["max_generator"] = s.max_generator();
    ordered_json c;
    c["free"] = r.free;
    c["telescopic"] = r.telescopic;
    c["complete_intersection"] = r.complete_intersection;
    c["si"] = r.si;
    c["gsi"] = r.gsi;
    if (r.gsi_witness) c["gsi_witness"] = spec_json(*r.gsi_witness);
    j["classification"] = c;
    return j.dump() + "\n";
  }

  std::ostringstream out;
  out << "S = " << angle_brackets(s.minimal_generators()) << "\n";
  out << "  frobenius            " << s.frobenius() << "\n";
  out << "  genus                " << s.genus() << "\n";
  out << "  multiplicity         " << s.multiplicity() << "\n";
  out << "  embedding dimension  " << s.embedding_dimension() << "\n";
  out << "  max generator        " << s.max_generator() << "\n";
  out << "  free                   " << bool_word(r.free) << "\n";
  out << "  telescopic             " << bool_word(r.telescopic) << "\n";
  out << "  complete intersection  " << bool_word(r.complete_intersection) << "\n";
  out << "  strongly increasing    " << bool_word(r.si) << "\n";
  out << "  GSI                    " << bool_word(r.gsi);
  if (r.gsi_witness) {
    const GluingSpec& w = *r.gsi_witness;
    out << "   [" << angle_brackets(w.base.minimal_generators()) << " glued with d=" << w.d
        << ", gamma=" << w.gamma << "]";
  }
  out << "\n";
  return out.str();
}

std::string render_partition(const GluingSpec& spec, const GsiGapPartition& p, Format f) {
  if (f == Format::json) {
    ordered_json j;
    j["base_gens"] = gens_json(spec.base.minimal_generators());
    j["d"] = spec.d;
    j["gamma"] = spec.gamma;
    j["frobenius"] = gsi_frobenius(spec);
    j["genus"] = p.total_size();
    j["initial"] = ordered_json::array({p.initial_lo, p.initial_hi});
    j["middle"] = ordered_json(p.middle);
    j["A"] = ordered_json(p.a_blocks);
    j["B"] = ordered_json(p.b_blocks);
    return j.dump() + "\n";
  }

  std::ostringstream out;
  out << "gaps of " << angle_brackets(spec.base.minimal_generators()) << " glued with d=" << spec.d
      << ", gamma=" << spec.gamma << "\n";
  out << "  frobenius " << gsi_frobenius(spec) << ", genus " << p.total_size() << "\n";
  out << "  initial  [" << p.initial_lo << ".." << p.initial_hi << "]\n";
  out << "  middle   " << gens_plain(p.middle) << "\n";
  for (std::size_t k = 0; k < p.a_blocks.size(); ++k)
    out << "  A_" << (k + 1) << "      " << gens_plain(p.a_blocks[k]) << "\n";
  for (std::size_t l = 0; l < p.b_blocks.size(); ++l)
    out << "  B_" << (l + 1) << "      " << gens_plain(p.b_blocks[l]) << "\n";
  return out.str();
}

std::string render_gluing(const GluingSpec& spec, const NumericalSemigroup& glued, Format f) {
  if (f == Format::json) {
    ordered_json j = semigroup_json(glued);
    j["gsi"] = spec.is_gsi;
    j["base_gens"] = gens_json(spec.base.minimal_generators());
    j["d"] = spec.d;
    j["gamma"] = spec.gamma;
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << angle_brackets(spec.base.minimal_generators()) << " glued with d=" << spec.d
      << ", gamma=" << spec.gamma << " -> " << angle_brackets(glued.minimal_generators()) << "\n";
  out << "  frobenius " << glued.frobenius() << ", genus " << glued.genus() << ", GSI "
      << bool_word(spec.is_gsi) << "\n";
  return out.str();
}

std::string render_catalog(const GsiCatalog& c, Format f) {
  std::ostringstream out;
  if (f == Format::json) {
    for (const auto& [key, list] : c.entries) {
      for (const CatalogEntry& e : list) {
        ordered_json j;
        j["frobenius"] = e.frobenius;
        j["gens"] = gens_json(e.gens);
        j["base_gens"] = gens_json(e.base_gens);
        j["d"] = e.d;
        j["gamma"] = e.gamma;
        out << j.dump() << "\n";
      }
    }
    return out.str();
  }
  if (f == Format::csv) {
    out << "frobenius,gens,base_gens,d,gamma\n";
    for (const auto& [key, list] : c.entries)
      for (const CatalogEntry& e : list)
        out << e.frobenius << ",\"" << gens_plain(e.gens) << "\",\"" << gens_plain(e.base_gens)
            << "\"," << e.d << "," << e.gamma << "\n";
    return out.str();
  }
  for (Int key = 1; key <= c.bound; ++key) {
    out << key << "\t";
    auto it = c.entries.find(key);
    if (it == c.entries.end()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (i) out << "  ";
      out << angle_brackets(it->second[i].gens);
    }
    out << "\n";
  }
  out << "total " << c.total() << "\n";
  return out.str();
}

std::string render_scan(const std::vector<EvenScanRecord>& records, Format f) {
  std::ostringstream out;
  if (f == Format::json) {
    for (const EvenScanRecord& r : records) {
      ordered_json j;
      j["f"] = r.f;
      j["found"] = r.found;
      if (r.witness) {
        j["base_gens"] = gens_json(r.witness->base.minimal_generators());
        j["d"] = r.witness->d;
        j["gamma"] = r.witness->gamma;
      } else {
        j["base_gens"] = nullptr;
        j["d"] = nullptr;
        j["gamma"] = nullptr;
      }
      out << j.dump() << "\n";
    }
    return out.str();
  }
  if (f == Format::csv) {
    out << "f,found,base_gens,d,gamma\n";
    for (const EvenScanRecord& r : records) {
      out << r.f << "," << bool_word(r.found) << ",";
      if (r.witness)
        out << "\"" << gens_plain(r.witness->base.minimal_generators()) << "\"," << r.witness->d
            << "," << r.witness->gamma;
      else
        out << ",,";
      out << "\n";
    }
    return out.str();
  }
  for (const EvenScanRecord& r : records) {
    if (!r.found) continue;
    out << r.f << "  " << angle_brackets(r.witness->base.minimal_generators())
        << " d=" << r.witness->d << " gamma=" << r.witness->gamma << "\n";
  }
  return out.str();
}

std::string render_witness(const GluingSpec& spec, Format f) {
  if (f == Format::json) {
    ordered_json j = spec_json(spec);
    j["frobenius"] = gsi_frobenius(spec);
    j["gens"] = gens_json(glue(spec).minimal_generators());
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << angle_brackets(spec.base.minimal_generators()) << " glued with d=" << spec.d
      << ", gamma=" << spec.gamma << " -> " << angle_brackets(glue(spec).minimal_generators())
      << ", frobenius " << gsi_frobenius(spec) << "\n";
  return out.str();
}

}  // namespace gsi
