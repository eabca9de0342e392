#ifndef LHGF_IO_HPP
#define LHGF_IO_HPP

#include <string>

#include <json.hpp>

#include "lhgf/elgf.hpp"

namespace lhgf {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

SimplicialComplex load_complex(const Json& j);
FiniteGroup load_group(const Json& j);
CrossedModule load_crossed_module(const Json& j);

/// {"model": "discrete", "group": ...} | {"model": "circle"} |
/// {"model": "crossed_module", ...}
ModelPtr load_model(const Json& j);

GaugeField1 load_field1(const Json& j, const SimplicialComplex& base, const ModelPtr& model);
GaugeField2 load_field2(const Json& j, const SimplicialComplex& base, const ModelPtr& model);
GaugeTransform load_transform(const Json& j, const SimplicialComplex& base,
                              const ModelPtr& model);

/// Cover file also carries the transition values; the two loaders share
/// the same document.
Cover load_cover(const Json& j, const SimplicialComplex& parent);
TransitionSystem load_transitions(const Json& j, const Cover& cover, const ModelPtr& model);

ELGF load_elgf(const Json& j, const SimplicialComplex& base, const ModelPtr& model);

Json field1_to_json(const GaugeField1& a);
Json field2_to_json(const GaugeField2& a);
Json transform_to_json(const GaugeTransform& u);
Json elgf_to_json(const ELGF& e);
Json report_to_json(const Report& r);

}  // namespace lhgf

#endif
