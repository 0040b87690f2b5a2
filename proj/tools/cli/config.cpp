/*
   Copyright 2026 The dgov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace dgov::cli {

namespace pt = boost::property_tree;

namespace {

constexpr std::string_view kAuthorityPrefix = "authority:";

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    boost::split(out, s, boost::is_any_of(","));
    for (auto& x : out) boost::trim(x);
    out.erase(std::remove(out.begin(), out.end(), ""), out.end());
    return out;
}

ledger::Deadlines parse_deadlines(const std::string& s) {
    const auto parts = split_list(s);
    if (parts.size() != 3) throw ConfigError("deadlines need three comma-separated values: " + s);
    try {
        return {std::stoull(parts[0]), std::stoull(parts[1]), std::stoull(parts[2])};
    } catch (const std::exception&) {
        throw ConfigError("deadline is not an integer: " + s);
    }
}

std::string render_deadlines(const ledger::Deadlines& d) {
    return std::to_string(d.ddl1) + "," + std::to_string(d.ddl2) + "," + std::to_string(d.ddl3);
}

}  // namespace

ledger::LedgerConfig Config::ledger_config() const {
    ledger::LedgerConfig c;
    c.k = k;
    for (const auto& a : setup_addresses()) c.aa_list.insert(a);
    for (const auto& s : roster) c.aa_list.insert(s.address);
    c.sys = sys;
    c.auth = auth;
    c.registration_threshold = registration_threshold;
    c.insecure_no_pok = insecure_no_pok;
    return c;
}

std::vector<ledger::Address> Config::setup_addresses() const {
    std::vector<ledger::Address> out;
    for (std::size_t i = 0; i < setup_participants; ++i)
        out.push_back(ledger::Address::from_label("setup-" + std::to_string(i)));
    return out;
}

void Config::validate() const {
    if (k == 0) throw ConfigError("k must be at least 1");
    if (setup_participants == 0) throw ConfigError("at least one setup participant is required");
    for (const auto* d : {&sys, &auth})
        if (!(d->ddl1 < d->ddl2 && d->ddl2 < d->ddl3)) throw ConfigError("deadlines must be strictly increasing");
    if (auth.ddl1 <= sys.ddl3) throw ConfigError("authority deadlines must follow the setup deadlines");
    std::size_t trust = 0;
    std::set<std::string> names, attrs;
    for (const auto& s : roster) {
        if (!names.insert(s.name).second) throw ConfigError("duplicate authority " + s.name);
        if (s.trust) {
            ++trust;
            if (!s.attributes.empty()) throw ConfigError("trust authority " + s.name + " cannot own attributes");
            continue;
        }
        if (s.attributes.empty()) throw ConfigError("authority " + s.name + " declares no attributes");
        for (const auto& a : s.attributes)
            if (!attrs.insert(a).second) throw ConfigError("attribute declared twice: " + a);
    }
    if (trust != 1) throw ConfigError("exactly one trust authority is required");
    if (roster.size() < 2) throw ConfigError("at least one attribute-holding authority is required");
}

Config default_config(std::size_t authorities, std::size_t k) {
    if (authorities < 2) throw ConfigError("--authorities must be at least 2");
    Config c;
    c.k = k;
    if (authorities == 3) {
        c.roster = ceremony::default_authority_roster();
    } else {
        for (std::size_t i = 1; i < authorities; ++i) {
            const auto name = "AA" + std::to_string(i);
            c.roster.push_back({name, ledger::Address::from_label(name), {"attr" + std::to_string(i)}, false});
        }
        c.roster.push_back({"TA", ledger::Address::from_label("TA"), {}, true});
    }
    c.validate();
    return c;
}

Config parse_config(const std::string& text) {
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    Config c;
    try {
        const auto& sys = tree.get_child("system");
        c.k = sys.get<std::size_t>("k", c.k);
        c.setup_participants = sys.get<std::size_t>("setup_participants", c.setup_participants);
        c.registration_threshold = sys.get<std::uint64_t>("registration_threshold", c.registration_threshold);
        c.insecure_no_pok = sys.get<bool>("insecure_no_pok", c.insecure_no_pok);
        if (const auto d = tree.get_child_optional("deadlines")) {
            if (const auto s = d->get_optional<std::string>("sys")) c.sys = parse_deadlines(*s);
            if (const auto s = d->get_optional<std::string>("auth")) c.auth = parse_deadlines(*s);
        }
        for (const auto& [section, body] : tree) {
            if (!boost::starts_with(section, kAuthorityPrefix)) continue;
            ceremony::AuthoritySpec s;
            s.name = section.substr(kAuthorityPrefix.size());
            s.address = body.get_optional<std::string>("address")
                            ? ledger::Address::from_hex(body.get<std::string>("address"))
                            : ledger::Address::from_label(s.name);
            s.trust = body.get<bool>("trust", false);
            s.attributes = split_list(body.get<std::string>("attributes", ""));
            c.roster.push_back(std::move(s));
        }
    } catch (const pt::ptree_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

std::string render_config(const Config& c) {
    std::ostringstream os;
    os << "[system]\n"
       << "k = " << c.k << "\n"
       << "setup_participants = " << c.setup_participants << "\n"
       << "registration_threshold = " << c.registration_threshold << "\n"
       << "insecure_no_pok = " << (c.insecure_no_pok ? "true" : "false") << "\n\n"
       << "[deadlines]\n"
       << "sys = " << render_deadlines(c.sys) << "\n"
       << "auth = " << render_deadlines(c.auth) << "\n";
    for (const auto& s : c.roster) {
        os << "\n[" << kAuthorityPrefix << s.name << "]\n"
           << "address = " << s.address.to_hex() << "\n";
        if (s.trust) os << "trust = true\n";
        if (!s.attributes.empty()) os << "attributes = " << boost::join(s.attributes, ",") << "\n";
    }
    return os.str();
}

}  // namespace dgov::cli
