// SPDX-License-Identifier: Apache-2.0
#ifndef MCFTTDL_TOOLS_CSVIO_HPP
#define MCFTTDL_TOOLS_CSVIO_HPP

#include <string>
#include <vector>

namespace mcfttdl::tools {

// Shortest decimal form that round-trips the value; locale-free.
std::string format_double(double v);

// Header plus rows, comma separated, one trailing newline.
std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

// Write via a sibling temp file and rename, so readers never see a
// partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}

#endif
