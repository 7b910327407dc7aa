#pragma once

#include "epwlab/dcover.hpp"
#include "epwlab/k3.hpp"
#include "epwlab/verify_report.hpp"

#include <json.hpp>

namespace epwlab {

using json = nlohmann::json;

json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const json& j);

json to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j);

json to_json(const AltK& a);
AltK altk_from_json(const json& j);

json to_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const json& j);

// {"basis": QMatrix} plus an optional certificate object.
json lagrangian_to_json(const Lagrangian& a);
json lagrangian_to_json(const Lagrangian& a, const DeltaCertificate& cert);
json lagrangian_to_json(const Lagrangian& a, const ThetaCertificate& cert);
Lagrangian lagrangian_from_json(const json& j);
std::optional<DeltaCertificate> delta_certificate_from_json(const json& j);
std::optional<ThetaCertificate> theta_certificate_from_json(const json& j);

json to_json(const EPWSextic& s);
EPWSextic sextic_from_json(const json& j);

json cover_to_json(const CoverIdeal& c);

json k3_to_json(const K3Data& k);

json report_to_json(const VerifyReport& r);
std::string report_to_text(const VerifyReport& r);

json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

} // namespace epwlab
