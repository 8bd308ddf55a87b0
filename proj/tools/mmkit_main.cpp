// SPDX-License-Identifier: Apache-2.0

#include "mmkit/cli_app.hpp"

int main(int argc, char** argv) {
    return mmkit::run_app(argc, argv);
}
