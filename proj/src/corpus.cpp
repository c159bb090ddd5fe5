// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "error.hpp"

namespace wsnet {

namespace {

uint64_t fnv1a(uint64_t hash, std::string_view bytes) {
    for (char c : bytes) {
        hash ^= static_cast<uint8_t>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

uint64_t fnv1a_sep(uint64_t hash) {
    // separator byte outside of UTF-8 text
    hash ^= 0xFF;
    hash *= 0x100000001b3ULL;
    return hash;
}

}  // namespace

ServiceIo service_io(const ServiceDescription& service) {
    std::set<std::string> in;
    std::set<std::string> out;
    for (const Operation& op : service.operations) {
        for (const Parameter& p : op.inputs) in.insert(p.normalized_name);
        for (const Parameter& p : op.outputs) out.insert(p.normalized_name);
    }
    return ServiceIo{{in.begin(), in.end()}, {out.begin(), out.end()}};
}

Corpus::Corpus(std::vector<ServiceDescription> services) : services_(std::move(services)) {
    std::unordered_map<std::string, size_t> seen_ids;
    for (size_t i = 0; i < services_.size(); ++i) {
        auto [it, inserted] = seen_ids.emplace(services_[i].id, i);
        if (!inserted) {
            throw Error(ErrorCode::Schema,
                        "duplicate service id '" + services_[i].id + "' (services[" +
                            std::to_string(it->second) + "] and services[" + std::to_string(i) + "])");
        }
    }

    // Vocabulary over normalized names, with role flags and counts.
    std::map<std::string, VocabEntry> vocab;
    for (const ServiceDescription& s : services_) {
        for (const Operation& op : s.operations) {
            for (const Parameter& p : op.inputs) {
                VocabEntry& e = vocab[p.normalized_name];
                e.name = p.normalized_name;
                e.input_role = true;
                ++e.occurrences;
            }
            for (const Parameter& p : op.outputs) {
                VocabEntry& e = vocab[p.normalized_name];
                e.name = p.normalized_name;
                e.output_role = true;
                ++e.occurrences;
            }
        }
    }
    vocab_.reserve(vocab.size());
    std::unordered_map<std::string, uint32_t> index;
    for (auto& [name, entry] : vocab) {
        index.emplace(name, static_cast<uint32_t>(vocab_.size()));
        vocab_.push_back(std::move(entry));
    }

    input_ids_.resize(services_.size());
    output_ids_.resize(services_.size());
    for (size_t i = 0; i < services_.size(); ++i) {
        const ServiceIo io = service_io(services_[i]);
        for (const std::string& n : io.inputs) input_ids_[i].push_back(index.at(n));
        for (const std::string& n : io.outputs) output_ids_[i].push_back(index.at(n));
        std::sort(input_ids_[i].begin(), input_ids_[i].end());
        std::sort(output_ids_[i].begin(), output_ids_[i].end());
    }

    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < services_.size(); ++i) {
        const ServiceDescription& s = services_[i];
        h = fnv1a(h, s.id);
        h = fnv1a_sep(h);
        for (const Operation& op : s.operations) {
            h = fnv1a(h, op.name);
            h = fnv1a_sep(h);
            for (const Parameter& p : op.inputs) h = fnv1a(fnv1a_sep(h), p.normalized_name);
            h = fnv1a_sep(h);
            for (const Parameter& p : op.outputs) h = fnv1a(fnv1a_sep(h), p.normalized_name);
            h = fnv1a_sep(h);
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    fingerprint_ = buf;
}

size_t Corpus::operation_count() const {
    size_t n = 0;
    for (const ServiceDescription& s : services_) n += s.operations.size();
    return n;
}

bool Corpus::operator==(const Corpus& other) const {
    // Equality on the normalized view: ids, names, operations and
    // normalized parameter names, all order-sensitive.
    if (services_.size() != other.services_.size()) return false;
    for (size_t i = 0; i < services_.size(); ++i) {
        const ServiceDescription& a = services_[i];
        const ServiceDescription& b = other.services_[i];
        if (a.id != b.id || a.name != b.name) return false;
        if (a.operations.size() != b.operations.size()) return false;
        for (size_t k = 0; k < a.operations.size(); ++k) {
            const Operation& oa = a.operations[k];
            const Operation& ob = b.operations[k];
            if (oa.name != ob.name) return false;
            auto names_equal = [](const std::vector<Parameter>& x, const std::vector<Parameter>& y) {
                if (x.size() != y.size()) return false;
                for (size_t t = 0; t < x.size(); ++t) {
                    if (x[t].normalized_name != y[t].normalized_name) return false;
                }
                return true;
            };
            if (!names_equal(oa.inputs, ob.inputs) || !names_equal(oa.outputs, ob.outputs)) return false;
        }
    }
    return true;
}

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::Schema, path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed, bool strict) {
    if (!strict) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) { known = true; break; }
        }
        if (!known) schema_error(path + "." + it.key(), "unknown key");
    }
}

Parameter make_parameter(const json& value, const std::string& path, const LoadOptions& options) {
    if (!value.is_string()) schema_error(path, "expected string");
    Parameter p;
    p.raw_name = value.get<std::string>();
    if (p.raw_name.empty()) schema_error(path, "parameter name must be non-empty");
    p.normalized_name = normalize_name(p.raw_name, options.normalize);
    if (p.normalized_name.empty()) schema_error(path, "parameter name is all whitespace");
    return p;
}

std::vector<Parameter> parameter_list(const json& arr, const std::string& path,
                                      const LoadOptions& options) {
    if (!arr.is_array()) schema_error(path, "expected array of strings");
    std::vector<Parameter> out;
    out.reserve(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        out.push_back(make_parameter(arr[i], path + "[" + std::to_string(i) + "]", options));
    }
    return out;
}

}  // namespace

Corpus load_json_corpus(std::string_view text, const LoadOptions& options, const WarningSink& warn) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("corpus JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("$", "expected object");
    check_keys(doc, "$", {"services"}, options.strict);
    if (!doc.contains("services")) schema_error("$.services", "missing");
    const json& services = doc["services"];
    if (!services.is_array()) schema_error("$.services", "expected array");

    std::vector<ServiceDescription> out;
    out.reserve(services.size());
    for (size_t i = 0; i < services.size(); ++i) {
        const std::string spath = "$.services[" + std::to_string(i) + "]";
        const json& sv = services[i];
        if (!sv.is_object()) schema_error(spath, "expected object");
        check_keys(sv, spath, {"id", "name", "operations"}, options.strict);
        ServiceDescription service;
        if (!sv.contains("id") || !sv["id"].is_string()) schema_error(spath + ".id", "expected string");
        service.id = sv["id"].get<std::string>();
        if (service.id.empty()) schema_error(spath + ".id", "must be non-empty");
        if (sv.contains("name")) {
            if (!sv["name"].is_string()) schema_error(spath + ".name", "expected string");
            service.name = sv["name"].get<std::string>();
        }
        if (!sv.contains("operations") || !sv["operations"].is_array()) {
            schema_error(spath + ".operations", "expected array");
        }
        const json& ops = sv["operations"];
        for (size_t k = 0; k < ops.size(); ++k) {
            const std::string opath = spath + ".operations[" + std::to_string(k) + "]";
            const json& ov = ops[k];
            if (!ov.is_object()) schema_error(opath, "expected object");
            check_keys(ov, opath, {"name", "inputs", "outputs"}, options.strict);
            Operation op;
            if (!ov.contains("name") || !ov["name"].is_string()) {
                schema_error(opath + ".name", "expected string");
            }
            op.name = ov["name"].get<std::string>();
            if (!ov.contains("inputs")) schema_error(opath + ".inputs", "missing");
            if (!ov.contains("outputs")) schema_error(opath + ".outputs", "missing");
            op.inputs = parameter_list(ov["inputs"], opath + ".inputs", options);
            op.outputs = parameter_list(ov["outputs"], opath + ".outputs", options);
            if (op.inputs.empty() && op.outputs.empty() && warn) {
                warn("service '" + service.id + "' operation '" + op.name +
                     "' has neither inputs nor outputs");
            }
            service.operations.push_back(std::move(op));
        }
        out.push_back(std::move(service));
    }
    return Corpus(std::move(out));
}

Corpus load_json_corpus_file(const std::string& path, const LoadOptions& options,
                             const WarningSink& warn) {
    return load_json_corpus(read_file(path), options, warn);
}

std::string corpus_to_json(const Corpus& corpus) {
    nlohmann::ordered_json doc;
    doc["services"] = nlohmann::ordered_json::array();
    for (const ServiceDescription& s : corpus.services()) {
        nlohmann::ordered_json sv;
        sv["id"] = s.id;
        if (s.name) sv["name"] = *s.name;
        sv["operations"] = nlohmann::ordered_json::array();
        for (const Operation& op : s.operations) {
            nlohmann::ordered_json ov;
            ov["name"] = op.name;
            ov["inputs"] = nlohmann::ordered_json::array();
            for (const Parameter& p : op.inputs) ov["inputs"].push_back(p.normalized_name);
            ov["outputs"] = nlohmann::ordered_json::array();
            for (const Parameter& p : op.outputs) ov["outputs"].push_back(p.normalized_name);
            sv["operations"].push_back(std::move(ov));
        }
        doc["services"].push_back(std::move(sv));
    }
    return doc.dump(2) + "\n";
}

void save_json_corpus_file(const Corpus& corpus, const std::string& path) {
    write_file(path, corpus_to_json(corpus));
}

Corpus load_wsdl_corpus(const std::vector<std::string>& paths, const LoadOptions& options,
                        const std::function<void(const std::string&, const std::string&)>& on_error,
                        const WarningSink& warn) {
    if (paths.empty()) throw Error(ErrorCode::EmptyInput, "no input documents");
    std::vector<ServiceDescription> services;
    services.reserve(paths.size());
    for (const std::string& path : paths) {
        try {
            services.push_back(parse_wsdl_file(path, options, warn));
        } catch (const Error& e) {
            if (!on_error) throw;
            on_error(path, e.what());
        }
    }
    return Corpus(std::move(services));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "read failure on '" + path + "'");
    return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::Io, "write failure on '" + path + "'");
}

}  // namespace wsnet
