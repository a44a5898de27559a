/* Decision-diagram evaluator (generated; do not edit). */
/* features[0] = sepal_length */
/* features[1] = sepal_width */
/* features[2] = petal_length */
/* features[3] = petal_width */

static const double evaluate_v156[3] = {8.0, 0.0, 1.0};
static const double evaluate_v152[3] = {8.0, 0.3333333333333333, 0.6666666666666666};
static const double evaluate_v150[3] = {8.0, 0.6666666666666666, 0.3333333333333333};
static const double evaluate_v149[3] = {8.0, 1.0, 0.0};
static const double evaluate_v131[3] = {8.333333333333334, 0.0, 0.6666666666666666};
static const double evaluate_v128[3] = {8.333333333333334, 0.3333333333333333, 0.3333333333333333};
static const double evaluate_v127[3] = {8.333333333333334, 0.6666666666666666, 0.0};
static const double evaluate_v122[3] = {8.666666666666666, 0.0, 0.3333333333333333};
static const double evaluate_v120[3] = {8.666666666666666, 0.3333333333333333, 0.0};
static const double evaluate_v119[3] = {9.0, 0.0, 0.0};
static const double evaluate_v6[3] = {0.0, 0.0, 1.0};
static const double evaluate_v105[3] = {0.0, 0.3333333333333333, 0.6666666666666666};
static const double evaluate_v103[3] = {0.0, 0.6666666666666666, 0.3333333333333333};
static const double evaluate_v5[3] = {0.0, 1.0, 0.0};
static const double evaluate_v87[3] = {0.3333333333333333, 0.0, 0.6666666666666666};
static const double evaluate_v84[3] = {0.3333333333333333, 0.3333333333333333, 0.3333333333333333};
static const double evaluate_v83[3] = {0.3333333333333333, 0.6666666666666666, 0.0};
static const double evaluate_v79[3] = {0.6666666666666666, 0.0, 0.3333333333333333};
static const double evaluate_v77[3] = {0.6666666666666666, 0.3333333333333333, 0.0};
static const double evaluate_v4[3] = {1.0, 0.0, 0.0};

const double * evaluate(const double features[]) {
    (void)features;
    goto n168;
n168:
    if (features[1] <= 3.8) goto n118;
    goto n167;
n167:
    if (features[2] <= 2.45) goto n140;
    goto n166;
n166:
    if (features[2] <= 2.6) goto n147;
    goto n165;
n165:
    if (features[2] <= 4.0) goto n164;
    goto n116;
n164:
    if (features[2] <= 4.85) goto n160;
    goto n163;
n163:
    if (features[2] <= 4.95) goto n161;
    goto n162;
n162:
    if (features[3] <= 0.8) goto n144;
    goto n157;
n161:
    if (features[3] <= 0.8) goto n144;
    goto n153;
n160:
    if (features[2] <= 4.95) goto n155;
    goto n159;
n159:
    if (features[3] <= 0.8) goto n148;
    goto n158;
n158:
    if (features[3] <= 1.65) goto n153;
    goto n157;
n157:
    if (features[3] <= 1.75) goto n152;
    goto n156;
n156:
    return evaluate_v156;
n155:
    if (features[3] <= 0.8) goto n148;
    goto n154;
n154:
    if (features[3] <= 1.65) goto n151;
    goto n153;
n153:
    if (features[3] <= 1.75) goto n150;
    goto n152;
n152:
    return evaluate_v152;
n151:
    if (features[3] <= 1.75) goto n149;
    goto n150;
n150:
    return evaluate_v150;
n149:
    return evaluate_v149;
n148:
    if (features[3] <= 1.65) goto n142;
    goto n144;
n147:
    if (features[2] <= 4.0) goto n146;
    goto n101;
n146:
    if (features[2] <= 4.95) goto n143;
    goto n145;
n145:
    if (features[3] <= 0.8) goto n141;
    goto n144;
n144:
    if (features[3] <= 1.75) goto n128;
    goto n131;
n143:
    if (features[3] <= 0.8) goto n141;
    goto n142;
n142:
    if (features[3] <= 1.75) goto n127;
    goto n128;
n141:
    if (features[3] <= 1.75) goto n120;
    goto n122;
n140:
    if (features[2] <= 2.6) goto n125;
    goto n139;
n139:
    if (features[2] <= 4.0) goto n138;
    goto n94;
n138:
    if (features[2] <= 4.85) goto n134;
    goto n137;
n137:
    if (features[2] <= 4.95) goto n135;
    goto n136;
n136:
    if (features[3] <= 0.8) goto n122;
    goto n131;
n135:
    if (features[3] <= 0.8) goto n122;
    goto n128;
n134:
    if (features[2] <= 4.95) goto n130;
    goto n133;
n133:
    if (features[3] <= 0.8) goto n126;
    goto n132;
n132:
    if (features[3] <= 1.65) goto n128;
    goto n131;
n131:
    return evaluate_v131;
n130:
    if (features[3] <= 0.8) goto n126;
    goto n129;
n129:
    if (features[3] <= 1.65) goto n127;
    goto n128;
n128:
    return evaluate_v128;
n127:
    return evaluate_v127;
n126:
    if (features[3] <= 1.65) goto n120;
    goto n122;
n125:
    if (features[2] <= 4.0) goto n124;
    goto n81;
n124:
    if (features[2] <= 4.95) goto n121;
    goto n123;
n123:
    if (features[3] <= 0.8) goto n119;
    goto n122;
n122:
    return evaluate_v122;
n121:
    if (features[3] <= 0.8) goto n119;
    goto n120;
n120:
    return evaluate_v120;
n119:
    return evaluate_v119;
n118:
    if (features[2] <= 2.45) goto n95;
    goto n117;
n117:
    if (features[2] <= 2.6) goto n101;
    goto n116;
n116:
    if (features[2] <= 4.85) goto n112;
    goto n115;
n115:
    if (features[2] <= 4.95) goto n113;
    goto n114;
n114:
    if (features[3] <= 0.8) goto n99;
    goto n109;
n113:
    if (features[3] <= 0.8) goto n99;
    goto n106;
n112:
    if (features[2] <= 4.95) goto n108;
    goto n111;
n111:
    if (features[3] <= 0.8) goto n102;
    goto n110;
n110:
    if (features[3] <= 1.65) goto n106;
    goto n109;
n109:
    if (features[3] <= 1.75) goto n105;
    goto n6;
n6:
    return evaluate_v6;
n108:
    if (features[3] <= 0.8) goto n102;
    goto n107;
n107:
    if (features[3] <= 1.65) goto n104;
    goto n106;
n106:
    if (features[3] <= 1.75) goto n103;
    goto n105;
n105:
    return evaluate_v105;
n104:
    if (features[3] <= 1.75) goto n5;
    goto n103;
n103:
    return evaluate_v103;
n5:
    return evaluate_v5;
n102:
    if (features[3] <= 1.65) goto n97;
    goto n99;
n101:
    if (features[2] <= 4.95) goto n98;
    goto n100;
n100:
    if (features[3] <= 0.8) goto n96;
    goto n99;
n99:
    if (features[3] <= 1.75) goto n84;
    goto n87;
n98:
    if (features[3] <= 0.8) goto n96;
    goto n97;
n97:
    if (features[3] <= 1.75) goto n83;
    goto n84;
n96:
    if (features[3] <= 1.75) goto n77;
    goto n79;
n95:
    if (features[2] <= 2.6) goto n81;
    goto n94;
n94:
    if (features[2] <= 4.85) goto n90;
    goto n93;
n93:
    if (features[2] <= 4.95) goto n91;
    goto n92;
n92:
    if (features[3] <= 0.8) goto n79;
    goto n87;
n91:
    if (features[3] <= 0.8) goto n79;
    goto n84;
n90:
    if (features[2] <= 4.95) goto n86;
    goto n89;
n89:
    if (features[3] <= 0.8) goto n82;
    goto n88;
n88:
    if (features[3] <= 1.65) goto n84;
    goto n87;
n87:
    return evaluate_v87;
n86:
    if (features[3] <= 0.8) goto n82;
    goto n85;
n85:
    if (features[3] <= 1.65) goto n83;
    goto n84;
n84:
    return evaluate_v84;
n83:
    return evaluate_v83;
n82:
    if (features[3] <= 1.65) goto n77;
    goto n79;
n81:
    if (features[2] <= 4.95) goto n78;
    goto n80;
n80:
    if (features[3] <= 0.8) goto n4;
    goto n79;
n79:
    return evaluate_v79;
n78:
    if (features[3] <= 0.8) goto n4;
    goto n77;
n77:
    return evaluate_v77;
n4:
    return evaluate_v4;
}

int evaluate_argmax(const double features[]) {
    const double *w = evaluate(features);
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (w[i] > w[best]) best = i;
    }
    return best;
}
