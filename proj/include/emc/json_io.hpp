#ifndef EMC_JSON_IO_HPP
#define EMC_JSON_IO_HPP

#include <json.hpp>

#include "emc/forms.hpp"
#include "emc/freelie.hpp"
#include "emc/invariants.hpp"
#include "emc/links.hpp"

namespace emc::io {

using nlohmann::json;

// Type errors and missing keys surface as nlohmann exceptions; violated
// structural invariants (symmetry, lengths, unimodularity) surface as
// std::invalid_argument. All indices in JSON are 0-based.

json to_json(const forms::IntSymForm& f);  // row-major array of arrays
forms::IntSymForm form_from_json(const json& j);

json to_json(const invariants::SystemOfInvariants& s);
invariants::SystemOfInvariants system_from_json(const json& j);

json to_json(const freelie::LieElement& x);
freelie::LieElement lie_element_from_json(const json& j);

json to_json(const links::FramedLinkS7& l);
links::FramedLinkS7 framed_link_from_json(const json& j);

json to_json(const links::LinkTuple& t);
links::LinkTuple link_tuple_from_json(const json& j);

json to_json(const invariants::RealizabilityReport& r);
json to_json(const invariants::IndeterminacyReport& r);

}  // namespace emc::io

#endif
