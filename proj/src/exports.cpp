// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
//
// Network serialization. All three writers are deterministic: identical
// networks produce byte-identical files.

#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "network.hpp"

namespace wsnet {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string format_threshold(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", t);
    return buf;
}

std::string to_dot(const InteractionNetwork& net) {
    std::ostringstream out;
    out << "digraph interactions {\n";
    out << "  // metric=" << metric_name(net.metric.kind)
        << " threshold=" << format_threshold(net.threshold)
        << " corpus=" << net.corpus_fingerprint << "\n";
    for (const std::string& id : net.nodes) {
        out << "  \"" << dot_escape(id) << "\";\n";
    }
    for (const auto& [source, target] : net.links) {
        out << "  \"" << dot_escape(net.nodes[source]) << "\" -> \""
            << dot_escape(net.nodes[target]) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_graphml(const InteractionNetwork& net) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"metric\" for=\"graph\" attr.name=\"metric\" attr.type=\"string\"/>\n"
        << "  <key id=\"threshold\" for=\"graph\" attr.name=\"threshold\" attr.type=\"double\"/>\n"
        << "  <key id=\"corpus\" for=\"graph\" attr.name=\"corpus\" attr.type=\"string\"/>\n"
        << "  <graph id=\"interactions\" edgedefault=\"directed\">\n"
        << "    <data key=\"metric\">" << metric_name(net.metric.kind) << "</data>\n"
        << "    <data key=\"threshold\">" << format_threshold(net.threshold) << "</data>\n"
        << "    <data key=\"corpus\">" << net.corpus_fingerprint << "</data>\n";
    for (const std::string& id : net.nodes) {
        out << "    <node id=\"" << xml_escape(id) << "\"/>\n";
    }
    for (const auto& [source, target] : net.links) {
        out << "    <edge source=\"" << xml_escape(net.nodes[source]) << "\" target=\""
            << xml_escape(net.nodes[target]) << "\"/>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string to_json(const InteractionNetwork& net) {
    nlohmann::ordered_json doc;
    doc["nodes"] = net.nodes;
    doc["links"] = nlohmann::ordered_json::array();
    for (const auto& [source, target] : net.links) {
        doc["links"].push_back({net.nodes[source], net.nodes[target]});
    }
    doc["meta"] = {{"metric", metric_name(net.metric.kind)},
                   {"threshold", net.threshold},
                   {"corpus", net.corpus_fingerprint}};
    return doc.dump(2) + "\n";
}

}  // namespace

ExportFormat export_format_from_name(std::string_view name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "graphml") return ExportFormat::GraphML;
    if (name == "json") return ExportFormat::Json;
    throw Error(ErrorCode::Usage,
                "unknown export format '" + std::string(name) + "' (valid: dot, graphml, json)");
}

std::string export_network(const InteractionNetwork& net, ExportFormat format) {
    switch (format) {
        case ExportFormat::Dot: return to_dot(net);
        case ExportFormat::GraphML: return to_graphml(net);
        case ExportFormat::Json: return to_json(net);
    }
    throw Error(ErrorCode::Internal, "unhandled export format");
}

void export_network_file(const InteractionNetwork& net, ExportFormat format,
                         const std::string& path) {
    write_file(path, export_network(net, format));
}

}  // namespace wsnet
