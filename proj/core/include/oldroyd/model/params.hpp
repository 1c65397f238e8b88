#pragma once

namespace oldroyd::model {

struct ModelParams {
    double Re;
    double We;
    double omega;
    double alpha;
    int dim;

    // Throws ConfigError unless Re, We > 0, omega in (0,1), alpha in [-1,1], dim in {2,3}.
    ModelParams(double Re, double We, double omega, double alpha, int dim);
};

}  // namespace oldroyd::model
