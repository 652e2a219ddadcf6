#pragma once

#include <json.hpp>

#include "gfc/forms.hpp"

namespace gfc {

using Json = nlohmann::ordered_json;

// Generator label: e1.. for algebra valence, e*1.. for dual valence.
std::string generator_label(Valence v, std::size_t a);

// Component triples [label, indices, polynomial] in canonical order; the
// polynomial strings re-parse to the identical polynomial.
Json json_form(const GForm& g);
Json json_scalar_form(const ScalarForm& f);

// Human-readable block, one "name[label][indices] = poly" line per
// component; "(zero)" when empty.
std::string human_form(const GForm& g, const std::string& name);
std::string human_scalar_form(const ScalarForm& f, const std::string& name);

// Engine conventions stated on every report so values are interpretable.
Json conventions_json(const Metric& g);
std::string conventions_human(const Metric& g);

}  // namespace gfc
