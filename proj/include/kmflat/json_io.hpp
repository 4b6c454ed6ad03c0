#pragma once

// JSON reading of GCM files and serialization of results. Rationals are
// written as "p/q" strings, object fields in a fixed order.

#include <string>

#include <json.hpp>
#include "kmflat/error.hpp"
#include "kmflat/flat.hpp"
#include "kmflat/horizon.hpp"
#include "kmflat/sl2.hpp"

namespace kmflat {

using Json = nlohmann::ordered_json;

/// {"gcm": [[int, ...], ...]}; throws MalformedJson or a validation error.
GcmMatrix parse_gcm_json(const std::string& text);
/// Throws FileNotFound.
GcmMatrix load_gcm_file(const std::string& path);

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const IntegerVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const Complex& z);
Json to_json(const Mat2& m);
Json word_json(const Word& w);
Json index_set_json(const std::vector<std::size_t>& s);

Json to_json(const Symmetrizer& s);
/// Flat object for an indecomposable matrix, per-component list otherwise.
Json classification_json(const GcmMatrix& m, const Classification& c);
Json to_json(const RootDatum& rd);
Json to_json(const BilinearForm& form);
Json to_json(const RealRoot& root);
Json to_json(const WeylElement& w);
Json coxeter_json(const CoxeterMatrix& m);
Json to_json(const ConeQuery& q);
Json to_json(const SingularResult& r);
Json to_json(const LoosReport& r);
Json to_json(const IwasawaTriple& t);
Json to_json(const SymmetricElementResult& r);
Json to_json(const DiagramAutomorphisms& a);
Json to_json(const IdealCell& cell);
Json to_json(const HorizonComplex& complex);
Json to_json(const KmError& e);

}  // namespace kmflat
