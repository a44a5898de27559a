// Decision-diagram evaluator (generated; do not edit).
// features[0] = sepal_length
// features[1] = sepal_width
// features[2] = petal_length
// features[3] = petal_width
function evaluate(features) {
    let node = 168;
    for (;;) {
        switch (node) {
        case 168:
            node = features[1] <= 3.8 ? 118 : 167;
            break;
        case 167:
            node = features[2] <= 2.45 ? 140 : 166;
            break;
        case 166:
            node = features[2] <= 2.6 ? 147 : 165;
            break;
        case 165:
            node = features[2] <= 4.0 ? 164 : 116;
            break;
        case 164:
            node = features[2] <= 4.85 ? 160 : 163;
            break;
        case 163:
            node = features[2] <= 4.95 ? 161 : 162;
            break;
        case 162:
            node = features[3] <= 0.8 ? 144 : 157;
            break;
        case 161:
            node = features[3] <= 0.8 ? 144 : 153;
            break;
        case 160:
            node = features[2] <= 4.95 ? 155 : 159;
            break;
        case 159:
            node = features[3] <= 0.8 ? 148 : 158;
            break;
        case 158:
            node = features[3] <= 1.65 ? 153 : 157;
            break;
        case 157:
            node = features[3] <= 1.75 ? 152 : 156;
            break;
        case 156:
            return [8.0, 0.0, 1.0];
        case 155:
            node = features[3] <= 0.8 ? 148 : 154;
            break;
        case 154:
            node = features[3] <= 1.65 ? 151 : 153;
            break;
        case 153:
            node = features[3] <= 1.75 ? 150 : 152;
            break;
        case 152:
            return [8.0, 0.3333333333333333, 0.6666666666666666];
        case 151:
            node = features[3] <= 1.75 ? 149 : 150;
            break;
        case 150:
            return [8.0, 0.6666666666666666, 0.3333333333333333];
        case 149:
            return [8.0, 1.0, 0.0];
        case 148:
            node = features[3] <= 1.65 ? 142 : 144;
            break;
        case 147:
            node = features[2] <= 4.0 ? 146 : 101;
            break;
        case 146:
            node = features[2] <= 4.95 ? 143 : 145;
            break;
        case 145:
            node = features[3] <= 0.8 ? 141 : 144;
            break;
        case 144:
            node = features[3] <= 1.75 ? 128 : 131;
            break;
        case 143:
            node = features[3] <= 0.8 ? 141 : 142;
            break;
        case 142:
            node = features[3] <= 1.75 ? 127 : 128;
            break;
        case 141:
            node = features[3] <= 1.75 ? 120 : 122;
            break;
        case 140:
            node = features[2] <= 2.6 ? 125 : 139;
            break;
        case 139:
            node = features[2] <= 4.0 ? 138 : 94;
            break;
        case 138:
            node = features[2] <= 4.85 ? 134 : 137;
            break;
        case 137:
            node = features[2] <= 4.95 ? 135 : 136;
            break;
        case 136:
            node = features[3] <= 0.8 ? 122 : 131;
            break;
        case 135:
            node = features[3] <= 0.8 ? 122 : 128;
            break;
        case 134:
            node = features[2] <= 4.95 ? 130 : 133;
            break;
        case 133:
            node = features[3] <= 0.8 ? 126 : 132;
            break;
        case 132:
            node = features[3] <= 1.65 ? 128 : 131;
            break;
        case 131:
            return [8.333333333333334, 0.0, 0.6666666666666666];
        case 130:
            node = features[3] <= 0.8 ? 126 : 129;
            break;
        case 129:
            node = features[3] <= 1.65 ? 127 : 128;
            break;
        case 128:
            return [8.333333333333334, 0.3333333333333333, 0.3333333333333333];
        case 127:
            return [8.333333333333334, 0.6666666666666666, 0.0];
        case 126:
            node = features[3] <= 1.65 ? 120 : 122;
            break;
        case 125:
            node = features[2] <= 4.0 ? 124 : 81;
            break;
        case 124:
            node = features[2] <= 4.95 ? 121 : 123;
            break;
        case 123:
            node = features[3] <= 0.8 ? 119 : 122;
            break;
        case 122:
            return [8.666666666666666, 0.0, 0.3333333333333333];
        case 121:
            node = features[3] <= 0.8 ? 119 : 120;
            break;
        case 120:
            return [8.666666666666666, 0.3333333333333333, 0.0];
        case 119:
            return [9.0, 0.0, 0.0];
        case 118:
            node = features[2] <= 2.45 ? 95 : 117;
            break;
        case 117:
            node = features[2] <= 2.6 ? 101 : 116;
            break;
        case 116:
            node = features[2] <= 4.85 ? 112 : 115;
            break;
        case 115:
            node = features[2] <= 4.95 ? 113 : 114;
            break;
        case 114:
            node = features[3] <= 0.8 ? 99 : 109;
            break;
        case 113:
            node = features[3] <= 0.8 ? 99 : 106;
            break;
        case 112:
            node = features[2] <= 4.95 ? 108 : 111;
            break;
        case 111:
            node = features[3] <= 0.8 ? 102 : 110;
            break;
        case 110:
            node = features[3] <= 1.65 ? 106 : 109;
            break;
        case 109:
            node = features[3] <= 1.75 ? 105 : 6;
            break;
        case 6:
            return [0.0, 0.0, 1.0];
        case 108:
            node = features[3] <= 0.8 ? 102 : 107;
            break;
        case 107:
            node = features[3] <= 1.65 ? 104 : 106;
            break;
        case 106:
            node = features[3] <= 1.75 ? 103 : 105;
            break;
        case 105:
            return [0.0, 0.3333333333333333, 0.6666666666666666];
        case 104:
            node = features[3] <= 1.75 ? 5 : 103;
            break;
        case 103:
            return [0.0, 0.6666666666666666, 0.3333333333333333];
        case 5:
            return [0.0, 1.0, 0.0];
        case 102:
            node = features[3] <= 1.65 ? 97 : 99;
            break;
        case 101:
            node = features[2] <= 4.95 ? 98 : 100;
            break;
        case 100:
            node = features[3] <= 0.8 ? 96 : 99;
            break;
        case 99:
            node = features[3] <= 1.75 ? 84 : 87;
            break;
        case 98:
            node = features[3] <= 0.8 ? 96 : 97;
            break;
        case 97:
            node = features[3] <= 1.75 ? 83 : 84;
            break;
        case 96:
            node = features[3] <= 1.75 ? 77 : 79;
            break;
        case 95:
            node = features[2] <= 2.6 ? 81 : 94;
            break;
        case 94:
            node = features[2] <= 4.85 ? 90 : 93;
            break;
        case 93:
            node = features[2] <= 4.95 ? 91 : 92;
            break;
        case 92:
            node = features[3] <= 0.8 ? 79 : 87;
            break;
        case 91:
            node = features[3] <= 0.8 ? 79 : 84;
            break;
        case 90:
            node = features[2] <= 4.95 ? 86 : 89;
            break;
        case 89:
            node = features[3] <= 0.8 ? 82 : 88;
            break;
        case 88:
            node = features[3] <= 1.65 ? 84 : 87;
            break;
        case 87:
            return [0.3333333333333333, 0.0, 0.6666666666666666];
        case 86:
            node = features[3] <= 0.8 ? 82 : 85;
            break;
        case 85:
            node = features[3] <= 1.65 ? 83 : 84;
            break;
        case 84:
            return [0.3333333333333333, 0.3333333333333333, 0.3333333333333333];
        case 83:
            return [0.3333333333333333, 0.6666666666666666, 0.0];
        case 82:
            node = features[3] <= 1.65 ? 77 : 79;
            break;
        case 81:
            node = features[2] <= 4.95 ? 78 : 80;
            break;
        case 80:
            node = features[3] <= 0.8 ? 4 : 79;
            break;
        case 79:
            return [0.6666666666666666, 0.0, 0.3333333333333333];
        case 78:
            node = features[3] <= 0.8 ? 4 : 77;
            break;
        case 77:
            return [0.6666666666666666, 0.3333333333333333, 0.0];
        case 4:
            return [1.0, 0.0, 0.0];
        default:
            throw new Error("unreachable node " + node);
        }
    }
}

function evaluateArgmax(features) {
    const w = evaluate(features);
    let best = 0;
    for (let i = 1; i < w.length; i += 1) {
        if (w[i] > w[best]) best = i;
    }
    return best;
}
