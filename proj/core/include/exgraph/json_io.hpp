#ifndef EXGRAPH_JSON_IO_HPP
#define EXGRAPH_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "exgraph/cycles.hpp"
#include "exgraph/expander.hpp"
#include "exgraph/gadgets.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/kst.hpp"
#include "exgraph/presets.hpp"
#include "exgraph/subdivision.hpp"

// JSON encodings of every certificate the library emits. Ordered maps keep
// reports byte-stable across runs.
namespace exg {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json expansion_certificate_to_json(const ExpansionCertificate& c);
ExpansionCertificate expansion_certificate_from_json(const Json& j);

Json kst_result_to_json(const KstResult& r);
KstResult kst_result_from_json(const Json& j);

Json hub_to_json(const Hub& h);
Hub hub_from_json(const Json& j);

Json unit_to_json(const Unit& u);
Unit unit_from_json(const Json& j);

Json expansion_to_json(const Expansion& f);
Expansion expansion_from_json(const Json& j);

Json adjuster_to_json(const Adjuster& a);
Adjuster adjuster_from_json(const Json& j);

Json octopus_to_json(const Octopus& o);
Octopus octopus_from_json(const Json& j);

Json subdivision_to_json(const SubdivisionCertificate& c);
SubdivisionCertificate subdivision_from_json(const Json& j);

Json spectrum_to_json(const CycleSpectrum& s);
CycleSpectrum spectrum_from_json(const Json& j);

Json regime_report_to_json(const RegimeReport& r);
Json preset_rows_to_json(const std::vector<PresetRow>& rows);

} // namespace exg

#endif
