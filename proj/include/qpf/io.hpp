#pragma once

/// Text and JSON rendering for every engine value, plus the inverse parsers.
/// Text output lists terms in canonical word order, so it is diff-stable;
/// JSON round-trips exactly.

#include <string>

#include <json.hpp>

#include "qpf/forms.hpp"
#include "qpf/hyper.hpp"
#include "qpf/ideal.hpp"
#include "qpf/matrix.hpp"
#include "qpf/pfaffian.hpp"
#include "qpf/scalar.hpp"

namespace qpf {

using Json = nlohmann::ordered_json;

// ---- text ----

std::string render_text(const LaurentScalar& s);
std::string render_text(const MatPoly& p);
std::string render_text(const BPoly& p);
std::string render_text(const HPoly& p);
std::string render_text(const Form& f);

// ---- JSON ----

Json scalar_to_json(const LaurentScalar& s);
LaurentScalar scalar_from_json(const Json& j);

Json mode_to_json(ScalarMode mode);
ScalarMode mode_from_json(const Json& j);

Json matpoly_to_json(const MatPoly& p);
MatPoly matpoly_from_json(const Json& j);

Json form_to_json(const Form& f);
Form form_from_json(const Json& j);

Json bpoly_to_json(const BPoly& p);
BPoly bpoly_from_json(const Json& j);

Json hpoly_to_json(const HPoly& p);
HPoly hpoly_from_json(const Json& j);

Json certificate_to_json(const MembershipResult& r);
MembershipResult certificate_from_json(const Json& j);

}  // namespace qpf
