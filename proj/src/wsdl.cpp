// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
//
// WSDL 1.1 ingestion: portType/message/part with names taken from XSD
// element references or part names. Bindings, SOAP details and SAWSDL
// annotation attributes are ignored. XML parsing is done with the
// rapidxml parser that ships inside Boost; it reports exact byte offsets,
// which we turn into line/column diagnostics.

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/property_tree/detail/rapidxml.hpp>

#include "corpus.hpp"
#include "error.hpp"

namespace wsnet {

namespace {

namespace rx = boost::property_tree::detail::rapidxml;
using XmlNode = rx::xml_node<char>;
using XmlAttr = rx::xml_attribute<char>;

std::string_view local_name(std::string_view qname) {
    const size_t colon = qname.rfind(':');
    return colon == std::string_view::npos ? qname : qname.substr(colon + 1);
}

bool is_element(const XmlNode* node, std::string_view local) {
    return node->type() == rx::node_element &&
           local_name({node->name(), node->name_size()}) == local;
}

const XmlAttr* find_attr(const XmlNode* node, std::string_view local) {
    for (const XmlAttr* a = node->first_attribute(); a; a = a->next_attribute()) {
        if (local_name({a->name(), a->name_size()}) == local) return a;
    }
    return nullptr;
}

std::string attr_value(const XmlAttr* attr) {
    return std::string(attr->value(), attr->value_size());
}

struct MessagePart {
    std::string part_name;
    std::string element_ref;  // local name of the referenced element, empty if none
};

struct Locator {
    std::string_view text;
    // line/column are 1-based
    std::pair<size_t, size_t> locate(size_t offset) const {
        size_t line = 1;
        size_t col = 1;
        for (size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }
};

std::string part_raw_name(const MessagePart& part, const std::string& message_name,
                          NameSource source, const std::string& context) {
    std::string base;
    switch (source) {
        case NameSource::Part:
            base = part.part_name;
            break;
        case NameSource::Element:
        case NameSource::Qualified:
            base = part.element_ref.empty() ? part.part_name : part.element_ref;
            break;
    }
    if (base.empty()) {
        throw Error(ErrorCode::Schema,
                    context + ": message part has neither a usable name nor element reference");
    }
    if (source == NameSource::Qualified) return message_name + "_" + base;
    return base;
}

}  // namespace

ServiceDescription parse_wsdl(std::string_view document, std::string_view service_id,
                              const LoadOptions& options, const WarningSink& warn) {
    std::vector<char> buffer(document.begin(), document.end());
    buffer.push_back('\0');

    rx::xml_document<char> doc;
    try {
        doc.parse<0>(buffer.data());
    } catch (const rx::parse_error& e) {
        const size_t offset = static_cast<size_t>(e.where<char>() - buffer.data());
        const auto [line, col] = Locator{document}.locate(offset);
        throw Error(ErrorCode::Parse, "malformed XML at line " + std::to_string(line) +
                                          " column " + std::to_string(col) + ": " + e.what());
    }

    const XmlNode* root = doc.first_node();
    while (root && root->type() != rx::node_element) root = root->next_sibling();
    if (!root || !is_element(root, "definitions")) {
        throw Error(ErrorCode::Schema, "document root is not a WSDL <definitions> element");
    }

    ServiceDescription service;
    service.id = std::string(service_id);
    if (const XmlAttr* name = find_attr(root, "name")) service.name = attr_value(name);

    // Pass 1: message definitions.
    std::unordered_map<std::string, std::vector<MessagePart>> messages;
    for (const XmlNode* node = root->first_node(); node; node = node->next_sibling()) {
        if (!is_element(node, "message")) continue;
        const XmlAttr* name = find_attr(node, "name");
        if (!name) throw Error(ErrorCode::Schema, "<message> without a name attribute");
        const std::string message_name = attr_value(name);
        if (messages.count(message_name)) {
            if (warn) warn("duplicate message '" + message_name + "' ignored");
            continue;
        }
        std::vector<MessagePart> parts;
        for (const XmlNode* part = node->first_node(); part; part = part->next_sibling()) {
            if (!is_element(part, "part")) continue;
            MessagePart mp;
            if (const XmlAttr* pn = find_attr(part, "name")) mp.part_name = attr_value(pn);
            if (const XmlAttr* el = find_attr(part, "element")) {
                mp.element_ref = std::string(local_name(attr_value(el)));
            }
            parts.push_back(std::move(mp));
        }
        messages.emplace(message_name, std::move(parts));
    }

    auto resolve = [&](const XmlNode* io_node, const std::string& op_name,
                       const char* io_kind) -> std::vector<Parameter> {
        std::vector<Parameter> params;
        // WSDL 2.0 style: the element is referenced directly on <input>/<output>.
        if (const XmlAttr* el = find_attr(io_node, "element")) {
            const std::string base(local_name(attr_value(el)));
            if (base.empty()) {
                throw Error(ErrorCode::Schema,
                            "operation '" + op_name + "' has an empty " + io_kind +
                                " element reference");
            }
            // No message indirection here, so the operation name serves as
            // the qualified prefix.
            const std::string raw =
                options.name_source == NameSource::Qualified ? op_name + "_" + base : base;
            params.push_back(Parameter{raw, normalize_name(raw, options.normalize)});
            return params;
        }
        const XmlAttr* msg = find_attr(io_node, "message");
        if (!msg) {
            if (warn) {
                warn("operation '" + op_name + "' " + io_kind +
                     " declares neither a message nor an element");
            }
            return params;
        }
        const std::string message_name(local_name(attr_value(msg)));
        auto it = messages.find(message_name);
        if (it == messages.end()) {
            throw Error(ErrorCode::Schema, "operation '" + op_name + "' references undefined " +
                                               io_kind + " message '" + message_name + "'");
        }
        if (it->second.empty() && warn) {
            warn("operation '" + op_name + "' " + io_kind + " message '" + message_name +
                 "' has no parts");
        }
        for (const MessagePart& part : it->second) {
            const std::string raw = part_raw_name(part, message_name, options.name_source,
                                                  "message '" + message_name + "'");
            const std::string normalized = normalize_name(raw, options.normalize);
            if (normalized.empty()) {
                throw Error(ErrorCode::Schema,
                            "message '" + message_name + "': parameter name is all whitespace");
            }
            params.push_back(Parameter{raw, normalized});
        }
        return params;
    };

    // Pass 2: operations under every portType (or WSDL 2.0 interface).
    for (const XmlNode* node = root->first_node(); node; node = node->next_sibling()) {
        if (!is_element(node, "portType") && !is_element(node, "interface")) continue;
        for (const XmlNode* op_node = node->first_node(); op_node; op_node = op_node->next_sibling()) {
            if (!is_element(op_node, "operation")) continue;
            Operation op;
            if (const XmlAttr* name = find_attr(op_node, "name")) op.name = attr_value(name);
            for (const XmlNode* io = op_node->first_node(); io; io = io->next_sibling()) {
                if (is_element(io, "input")) {
                    op.inputs = resolve(io, op.name, "input");
                } else if (is_element(io, "output")) {
                    op.outputs = resolve(io, op.name, "output");
                }
            }
            if (op.inputs.empty() && op.outputs.empty() && warn) {
                warn("service '" + service.id + "' operation '" + op.name +
                     "' has neither inputs nor outputs");
            }
            service.operations.push_back(std::move(op));
        }
    }

    if (service.operations.empty()) {
        throw Error(ErrorCode::EmptyInput,
                    "service '" + service.id + "' declares no operations");
    }
    return service;
}

ServiceDescription parse_wsdl_file(const std::string& path, const LoadOptions& options,
                                   const WarningSink& warn) {
    const std::string text = read_file(path);
    const std::string id = std::filesystem::path(path).stem().string();
    try {
        return parse_wsdl(text, id, options, warn);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

}  // namespace wsnet
