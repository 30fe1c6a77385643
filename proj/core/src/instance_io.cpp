#include "skewbisub/instance_io.hpp"

#include <string>

#include "skewbisub/errors.hpp"

namespace skewbisub {

namespace {

json values_object(const TableFunction& table) {
  json values = json::object();
  const auto count = table.values().size();
  for (std::size_t i = 0; i < count; ++i) {
    values[labeling_at(i, table.arity()).str()] = to_string(table.at_index(i));
  }
  return values;
}

const json& require(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw FormatError(where + ": expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw FormatError(where + ": missing key \"" + key + "\"");
  }
  return *it;
}

Rational rational_field(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? Rational(mpz_class(std::to_string(value.get<std::uint64_t>())))
               : Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  throw FormatError(where + ": expected a rational string or an integer");
}

std::size_t size_field(const json& value, const std::string& where) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw FormatError(where + ": expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

Alpha alpha_field(const json& doc) {
  const Rational a = rational_field(require(doc, "alpha", "instance"), "\"alpha\"");
  try {
    return Alpha(a);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("\"alpha\": ") + e.what());
  }
}

TableFunction table_from_values(const json& values, std::size_t arity,
                                const Alpha& alpha, const std::string& where) {
  if (!values.is_object()) throw FormatError(where + ": expected an object");
  const std::size_t count = labeling_count(arity);
  std::vector<Rational> table(count);
  std::vector<bool> seen(count, false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string& key = it.key();
    Labeling a;
    try {
      a = Labeling::parse(key);
    } catch (const FormatError& e) {
      throw FormatError(where + ": key \"" + key + "\": " + e.what());
    }
    if (a.size() != arity) {
      throw FormatError(where + ": key \"" + key + "\" has length " +
                        std::to_string(a.size()) + ", expected " +
                        std::to_string(arity));
    }
    const std::size_t index = index_of(a);
    table[index] = rational_field(it.value(), where + "[\"" + key + "\"]");
    seen[index] = true;
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) {
      throw FormatError(where + ": missing key \"" +
                        labeling_at(i, arity).str() + "\"");
    }
  }
  return TableFunction(arity, alpha, std::move(table));
}

}  // namespace

json to_json(const TableFunction& f) {
  return json{{"format", "table"},
              {"n", f.arity()},
              {"alpha", f.alpha().str()},
              {"values", values_object(f)}};
}

json to_json(const SumFunction& f) {
  json terms = json::array();
  for (const auto& term : f.terms()) {
    terms.push_back(json{{"scope", term.scope}, {"values", values_object(term.table)}});
  }
  return json{{"format", "sum"},
              {"n", f.arity()},
              {"alpha", f.alpha().str()},
              {"terms", std::move(terms)}};
}

json to_json(const ChainDecomposition& d) {
  json atoms = json::array();
  for (const auto& atom : d.atoms) {
    atoms.push_back(json{{"u", atom.u.str()}, {"w", to_string(atom.weight)}});
  }
  return json{{"atoms", std::move(atoms)}};
}

json to_json(const ViolationWitness& w) {
  return json{{"a", w.a.str()},
              {"b", w.b.str()},
              {"lhs", to_string(w.lhs)},
              {"rhs", to_string(w.rhs)}};
}

json to_json(const MinimizeReport& r) {
  json trace = json::array();
  for (const auto& [t, v] : r.trajectory_best) {
    trace.push_back(json::array({t, to_string(v)}));
  }
  return json{{"minimizer", r.minimizer.str()},
              {"value", to_string(r.value)},
              {"iterations", r.iterations_used},
              {"oracle_calls", r.oracle_calls},
              {"trace", std::move(trace)}};
}

std::unique_ptr<ValueOracle> instance_from_json(const json& doc) {
  const json& format = require(doc, "format", "instance");
  if (!format.is_string()) throw FormatError("\"format\": expected a string");
  const std::size_t n = size_field(require(doc, "n", "instance"), "\"n\"");
  if (n == 0) throw FormatError("\"n\": arity must be >= 1");
  const Alpha alpha = alpha_field(doc);

  const std::string kind = format.get<std::string>();
  if (kind == "table") {
    try {
      return std::make_unique<TableFunction>(
          table_from_values(require(doc, "values", "instance"), n, alpha, "\"values\""));
    } catch (const CapExceeded& e) {
      throw FormatError(std::string("\"n\": ") + e.what());
    }
  }
  if (kind == "sum") {
    const json& terms_doc = require(doc, "terms", "instance");
    if (!terms_doc.is_array()) throw FormatError("\"terms\": expected an array");
    std::vector<Term> terms;
    for (std::size_t t = 0; t < terms_doc.size(); ++t) {
      const std::string where = "terms[" + std::to_string(t) + "]";
      const json& scope_doc = require(terms_doc[t], "scope", where);
      if (!scope_doc.is_array()) throw FormatError(where + ".scope: expected an array");
      std::vector<std::size_t> scope;
      for (std::size_t i = 0; i < scope_doc.size(); ++i) {
        const std::string at = where + ".scope[" + std::to_string(i) + "]";
        const std::size_t j = size_field(scope_doc[i], at);
        if (j >= n) throw FormatError(at + ": index " + std::to_string(j) + " out of range");
        for (auto prev : scope) {
          if (prev == j) throw FormatError(at + ": repeated index " + std::to_string(j));
        }
        scope.push_back(j);
      }
      if (scope.empty()) throw FormatError(where + ".scope: must not be empty");
      TableFunction table = table_from_values(require(terms_doc[t], "values", where),
                                              scope.size(), alpha, where + ".values");
      terms.push_back(Term{std::move(scope), std::move(table)});
    }
    return std::make_unique<SumFunction>(n, alpha, std::move(terms));
  }
  throw FormatError("\"format\": unknown format \"" + kind + "\"");
}

ChainDecomposition decomposition_from_json(const json& doc) {
  const json& atoms = require(doc, "atoms", "decomposition");
  if (!atoms.is_array()) throw FormatError("\"atoms\": expected an array");
  ChainDecomposition d;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    const json& u = require(atoms[i], "u", where);
    if (!u.is_string()) throw FormatError(where + ".u: expected a string");
    d.atoms.push_back(ChainAtom{Labeling::parse(u.get<std::string>()),
                                rational_field(require(atoms[i], "w", where), where + ".w")});
  }
  return d;
}

}  // namespace skewbisub
