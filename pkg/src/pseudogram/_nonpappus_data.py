"""Embedded non-Pappus arrangement: 9 unit-weight elements.

Eight great circles in exact Pappus position plus a bent pseudoline
weaving around the three crossings that Pappus's theorem forces to be
collinear.  Frozen constants; see generators.non_pappus().
"""

ELEMENTS = [
    [
        [0.0, 1.0, -0.0],
        [-0.0980171403295606, 0.9951847266721969, -0.0],
        [-0.19509032201612825, 0.9807852804032304, -0.0],
        [-0.2902846772544624, 0.9569403357322089, -0.0],
        [-0.3826834323650898, 0.9238795325112867, -0.0],
        [-0.47139673682599764, 0.881921264348355, -0.0],
        [-0.5555702330196022, 0.8314696123025452, -0.0],
        [-0.6343932841636455, 0.773010453362737, -0.0],
        [-0.7071067811865476, 0.7071067811865476, -0.0],
        [-0.773010453362737, 0.6343932841636455, -0.0],
        [-0.8314696123025452, 0.5555702330196023, -0.0],
        [-0.8819212643483549, 0.4713967368259978, -0.0],
        [-0.9238795325112867, 0.38268343236508984, -0.0],
        [-0.9569403357322089, 0.29028467725446233, -0.0],
        [-0.9807852804032304, 0.19509032201612833, -0.0],
        [-0.9951847266721969, 0.09801714032956078, -0.0],
        [-1.0, 6.123233995736766e-17, -0.0],
        [-0.9987523388778448, -0.04993761694389224, -0.0],
        [-0.9951847266721969, -0.09801714032956065, 0.0],
        [-0.9807852804032304, -0.1950903220161282, 0.0],
        [-0.9569403357322089, -0.29028467725446216, 0.0],
        [-0.9238795325112867, -0.3826834323650897, 0.0],
        [-0.881921264348355, -0.4713967368259977, 0.0],
        [-0.8314696123025455, -0.555570233019602, 0.0],
        [-0.7730104533627371, -0.6343932841636454, 0.0],
        [-0.7071067811865476, -0.7071067811865475, 0.0],
        [-0.6561787149247867, -0.7546055221635047, -0.0],
        [-0.5555702330196022, -0.8314696123025453, 0.0],
        [-0.47139673682599786, -0.8819212643483549, 0.0],
        [-0.3826834323650899, -0.9238795325112867, 0.0],
        [-0.2902846772544624, -0.9569403357322088, 0.0],
        [-0.1950903220161286, -0.9807852804032304, 0.0],
        [-0.09801714032956084, -0.9951847266721969, 0.0],
        [-0.0, -1.0, 0.0],
        [0.0980171403295606, -0.9951847266721969, 0.0],
        [0.19509032201612825, -0.9807852804032304, 0.0],
        [0.2902846772544624, -0.9569403357322089, 0.0],
        [0.3826834323650898, -0.9238795325112867, 0.0],
        [0.47139673682599764, -0.881921264348355, 0.0],
        [0.5555702330196022, -0.8314696123025452, 0.0],
        [0.6343932841636455, -0.773010453362737, 0.0],
        [0.7071067811865476, -0.7071067811865476, 0.0],
        [0.773010453362737, -0.6343932841636455, 0.0],
        [0.8314696123025452, -0.5555702330196023, 0.0],
        [0.8819212643483549, -0.4713967368259978, 0.0],
        [0.9238795325112867, -0.38268343236508984, 0.0],
        [0.9569403357322089, -0.29028467725446233, 0.0],
        [0.9807852804032304, -0.19509032201612833, 0.0],
        [0.9951847266721969, -0.09801714032956078, 0.0],
        [1.0, -6.123233995736766e-17, 0.0],
        [0.9987523388778448, 0.04993761694389224, 0.0],
        [0.9951847266721969, 0.09801714032956065, -0.0],
        [0.9807852804032304, 0.1950903220161282, -0.0],
        [0.9569403357322089, 0.29028467725446216, -0.0],
        [0.9238795325112867, 0.3826834323650897, -0.0],
        [0.881921264348355, 0.4713967368259977, -0.0],
        [0.8314696123025455, 0.555570233019602, -0.0],
        [0.7730104533627371, 0.6343932841636454, -0.0],
        [0.7071067811865476, 0.7071067811865475, -0.0],
        [0.6561787149247867, 0.7546055221635047, 0.0],
        [0.5555702330196022, 0.8314696123025453, -0.0],
        [0.47139673682599786, 0.8819212643483549, -0.0],
        [0.3826834323650899, 0.9238795325112867, -0.0],
        [0.2902846772544624, 0.9569403357322088, -0.0],
        [0.1950903220161286, 0.9807852804032304, -0.0],
        [0.09801714032956084, 0.9951847266721969, -0.0],
    ],
    [
        [-0.0, 0.9889363528682976, 0.14834045293024445],
        [-0.06969304194714097, 0.994398272159491, 0.07946669887678248],
        [-0.13871490180223886, 0.9902835924963981, 0.009827637072220646],
        [-0.2064008613237025, 0.9766319404934872, -0.05990607024967957],
        [-0.2720990677204309, 0.9535747890222985, -0.12906284936708626],
        [-0.3351768113505307, 0.9213341910558209, -0.19697668269215765],
        [-0.39502661906104186, 0.8802206411769748, -0.26299352288449573],
        [-0.4510721044864794, 0.8306300853460464, -0.32647759168457247],
        [-0.5027735189646172, 0.7730401077246427, -0.3868175028059209],
        [-0.5496329496111632, 0.7080053312791419, -0.4434321499192919],
        [-0.5911991144930201, 0.6361520764583394, -0.4957763030242692],
        [-0.6345202892291061, 0.5393422458447402, -0.5536189523523951],
        [-0.6569052595997394, 0.4748170776519367, -0.5856826979519489],
        [-0.6804124537285913, 0.3868890778995236, -0.6223790920436627],
        [-0.6973669039767545, 0.295235124831855, -0.6530816352519762],
        [-0.7076053297200938, 0.20073789612011936, -0.6774946453020758],
        [-0.7110291293218083, 0.10430745173425052, -0.6953830115616706],
        [-0.7076053297200938, 0.006872469567927584, -0.7065744592849046],
        [-0.6973669039767545, -0.0906286982372083, -0.7109612087123356],
        [-0.6769711155364927, -0.2030913346609478, -0.7074348157356348],
        [-0.6569052595997394, -0.28208203816057076, -0.6992175653238248],
        [-0.6270717087199992, -0.3741904099562937, -0.683200270213443],
        [-0.5911991144930203, -0.46269512355085163, -0.6606033830256478],
        [-0.5389832233151491, -0.5659323844809067, -0.6238730809872851],
        [-0.5027735189646173, -0.6255270948254886, -0.5966025831884404],
        [-0.4510721044864794, -0.6982861916091823, -0.5558150332278565],
        [-0.39502661906104186, -0.7643204106456182, -0.5096746806578843],
        [-0.33517681135053085, -0.822993806307499, -0.45862588229665546],
        [-0.27209906772043096, -0.8737413217204608, -0.40316026597849985],
        [-0.20640086132370253, -0.9160742305696625, -0.3438119959091517],
        [-0.13871490180223914, -0.9495848438013647, -0.2811526283724436],
        [-0.06969304194714114, -0.9739504358913811, -0.21578560733084806],
        [0.0, -0.9889363528682976, -0.14834045293024445],
        [0.06969304194714097, -0.994398272159491, -0.07946669887678248],
        [0.13871490180223886, -0.9902835924963981, -0.009827637072220646],
        [0.2064008613237025, -0.9766319404934872, 0.05990607024967957],
        [0.2720990677204309, -0.9535747890222985, 0.12906284936708626],
        [0.3351768113505307, -0.9213341910558209, 0.19697668269215765],
        [0.39502661906104186, -0.8802206411769748, 0.26299352288449573],
        [0.4510721044864794, -0.8306300853460464, 0.32647759168457247],
        [0.5027735189646172, -0.7730401077246427, 0.3868175028059209],
        [0.5496329496111632, -0.7080053312791419, 0.4434321499192919],
        [0.5911991144930201, -0.6361520764583394, 0.4957763030242692],
        [0.6345202892291061, -0.5393422458447402, 0.5536189523523951],
        [0.6569052595997394, -0.4748170776519367, 0.5856826979519489],
        [0.6804124537285913, -0.3868890778995236, 0.6223790920436627],
        [0.6973669039767545, -0.295235124831855, 0.6530816352519762],
        [0.7076053297200938, -0.20073789612011936, 0.6774946453020758],
        [0.7110291293218083, -0.10430745173425052, 0.6953830115616706],
        [0.7076053297200938, -0.006872469567927584, 0.7065744592849046],
        [0.6973669039767545, 0.0906286982372083, 0.7109612087123356],
        [0.6769711155364927, 0.2030913346609478, 0.7074348157356348],
        [0.6569052595997394, 0.28208203816057076, 0.6992175653238248],
        [0.6270717087199992, 0.3741904099562937, 0.683200270213443],
        [0.5911991144930203, 0.46269512355085163, 0.6606033830256478],
        [0.5389832233151491, 0.5659323844809067, 0.6238730809872851],
        [0.5027735189646173, 0.6255270948254886, 0.5966025831884404],
        [0.4510721044864794, 0.6982861916091823, 0.5558150332278565],
        [0.39502661906104186, 0.7643204106456182, 0.5096746806578843],
        [0.33517681135053085, 0.822993806307499, 0.45862588229665546],
        [0.27209906772043096, 0.8737413217204608, 0.40316026597849985],
        [0.20640086132370253, 0.9160742305696625, 0.3438119959091517],
        [0.13871490180223914, 0.9495848438013647, 0.2811526283724436],
        [0.06969304194714114, 0.9739504358913811, 0.21578560733084806],
    ],
    [
        [0.0, -0.98305977226723, -0.1832852534982069],
        [0.0165711095621892, -0.9848467857465819, -0.17263315710634514],
        [0.039428622170366724, -0.9866800393100351, -0.15782231711926614],
        [0.09612716534626763, -0.9880493136137918, -0.12049116959265664],
        [0.22244288056963057, -0.9743457131530279, -0.03419935882736241],
        [0.4399798259111517, -0.8891388958639938, 0.12589589609256838],
        [0.6597541298516963, -0.6846948828976592, 0.30970535267797955],
        [0.8067730473440771, -0.36140789469262585, 0.4674415297478344],
        [0.830888429892383, -0.3158391112146112, 0.45811578547146276],
        [0.8539285565212158, -0.26666233024020375, 0.4468749511758937],
        [0.8753608320272305, -0.21396622088904776, 0.43354569548209565],
        [0.89460865539133, -0.15797621726615046, 0.41799386176975695],
        [0.9110814987280879, -0.09907271719201295, 0.4001438483640263],
        [0.9242151073352268, -0.03779745060265762, 0.3799970895957952],
        [0.9029086991388006, 0.05870288866701378, 0.425804945816306],
        [0.8729479162587422, 0.14921074415774885, 0.4644330837993896],
        [0.8369287728995398, 0.23169498574833286, 0.49585044385575616],
        [0.7973818463571414, 0.30519923471042065, 0.5206108126347836],
        [0.7564389977017224, 0.36964434936466084, 0.5395953092260815],
        [0.7157032243868886, 0.42553989817183513, 0.5537911968116822],
        [0.5604344604483641, 0.6637851749075508, 0.4952801804180168],
        [0.38245790170662297, 0.8289666205476474, 0.4080934886027709],
        [0.205140219920003, 0.9286318250888043, 0.3091284904427435],
        [0.09265666676734276, 0.9659618395644686, 0.24152115147289616],
        [0.03882892089788343, 0.9773654944802047, 0.20796395144680974],
        [0.016464142887649975, 0.9809033762538704, 0.19379757081226015],
        [-0.0, 0.98305977226723, 0.1832852534982069],
        [-0.0165711095621892, 0.9848467857465819, 0.17263315710634514],
        [-0.039428622170366724, 0.9866800393100351, 0.15782231711926614],
        [-0.09612716534626763, 0.9880493136137918, 0.12049116959265664],
        [-0.22244288056963057, 0.9743457131530279, 0.03419935882736241],
        [-0.4399798259111517, 0.8891388958639938, -0.12589589609256838],
        [-0.6597541298516963, 0.6846948828976592, -0.30970535267797955],
        [-0.8067730473440771, 0.36140789469262585, -0.4674415297478344],
        [-0.830888429892383, 0.3158391112146112, -0.45811578547146276],
        [-0.8539285565212158, 0.26666233024020375, -0.4468749511758937],
        [-0.8753608320272305, 0.21396622088904776, -0.43354569548209565],
        [-0.89460865539133, 0.15797621726615046, -0.41799386176975695],
        [-0.9110814987280879, 0.09907271719201295, -0.4001438483640263],
        [-0.9242151073352268, 0.03779745060265762, -0.3799970895957952],
        [-0.9029086991388006, -0.05870288866701378, -0.425804945816306],
        [-0.8729479162587422, -0.14921074415774885, -0.4644330837993896],
        [-0.8369287728995398, -0.23169498574833286, -0.49585044385575616],
        [-0.7973818463571414, -0.30519923471042065, -0.5206108126347836],
        [-0.7564389977017224, -0.36964434936466084, -0.5395953092260815],
        [-0.7157032243868886, -0.42553989817183513, -0.5537911968116822],
        [-0.5604344604483641, -0.6637851749075508, -0.4952801804180168],
        [-0.38245790170662297, -0.8289666205476474, -0.4080934886027709],
        [-0.205140219920003, -0.9286318250888043, -0.3091284904427435],
        [-0.09265666676734276, -0.9659618395644686, -0.24152115147289616],
        [-0.03882892089788343, -0.9773654944802047, -0.20796395144680974],
        [-0.016464142887649975, -0.9809033762538704, -0.19379757081226015],
    ],
    [
        [-0.0, 0.7794043729483578, 0.6265212074854107],
        [-0.08306153086542084, 0.8082553728425399, 0.5829442806662226],
        [-0.16532313378255617, 0.8293224316589173, 0.5337532817544596],
        [-0.24599258454654757, 0.8424026621046629, 0.4794219469601773],
        [-0.32429299224813035, 0.8473700944102025, 0.42047351673797334],
        [-0.3994702811577812, 0.8441768894869591, 0.3574756966953777],
        [-0.470800452887214, 0.8328537996439271, 0.2910351902775117],
        [-0.537596558889636, 0.8135098724261254, 0.221791855881255],
        [-0.5992153161497779, 0.7863314004271276, 0.15041254466910037],
        [-0.6550633023509856, 0.7515801271895481, 0.07758467842792144],
        [-0.7071067811865476, 0.7071067811865476, -0.0],
        [-0.747356330466719, 0.6607675791560679, -0.069604034707408],
        [-0.782912540067989, 0.6055808788409178, -0.1425473738325304],
        [-0.8109288739248751, 0.5445621036183471, -0.21411790382332443],
        [-0.8311355194270497, 0.4782988976500052, -0.28362636135154723],
        [-0.8433378755322503, 0.4074294118325198, -0.35040334197401407],
        [-0.8474184268806978, 0.332636158055515, -0.41380574686332],
        [-0.8433378755322504, 0.2546394362390149, -0.47322297620110076],
        [-0.8311355194270497, 0.1741903974514579, -0.5280828095880719],
        [-0.8109288739248753, 0.09206380991428609, -0.5778569168392813],
        [-0.782912540067989, 0.009050597560441576, -0.6220659460926056],
        [-0.747356330466719, -0.07404977699546983, -0.660284140229221],
        [-0.7046026708565267, -0.15643701171918867, -0.692143437147402],
        [-0.6769711155364927, -0.2030913346609478, -0.7074348157356348],
        [-0.6550633023509856, -0.23731767250288277, -0.7173370144017635],
        [-0.599215316149778, -0.3159128343693378, -0.7356222440711353],
        [-0.537596558889636, -0.3914655829452942, -0.7468230293980784],
        [-0.470800452887214, -0.4632483039606319, -0.7508315006969223],
        [-0.39947028115778144, -0.5305696905715459, -0.7476090541978054],
        [-0.3242929922481304, -0.5927814010233604, -0.737186723822083],
        [-0.24599258454654763, -0.6492843025360439, -0.7196648823086985],
        [-0.16532313378255648, -0.6995342412804009, -0.6952122745698388],
        [-0.08306153086542105, -0.7430472828769131, -0.664064392585184],
        [0.0, -0.7794043729483578, -0.6265212074854107],
        [0.08306153086542084, -0.8082553728425399, -0.5829442806662226],
        [0.16532313378255617, -0.8293224316589173, -0.5337532817544596],
        [0.24599258454654757, -0.8424026621046629, -0.4794219469601773],
        [0.32429299224813035, -0.8473700944102025, -0.42047351673797334],
        [0.3994702811577812, -0.8441768894869591, -0.3574756966953777],
        [0.470800452887214, -0.8328537996439271, -0.2910351902775117],
        [0.537596558889636, -0.8135098724261254, -0.221791855881255],
        [0.5992153161497779, -0.7863314004271276, -0.15041254466910037],
        [0.6550633023509856, -0.7515801271895481, -0.07758467842792144],
        [0.7071067811865476, -0.7071067811865476, 0.0],
        [0.747356330466719, -0.6607675791560679, 0.069604034707408],
        [0.782912540067989, -0.6055808788409178, 0.1425473738325304],
        [0.8109288739248751, -0.5445621036183471, 0.21411790382332443],
        [0.8311355194270497, -0.4782988976500052, 0.28362636135154723],
        [0.8433378755322503, -0.4074294118325198, 0.35040334197401407],
        [0.8474184268806978, -0.332636158055515, 0.41380574686332],
        [0.8433378755322504, -0.2546394362390149, 0.47322297620110076],
        [0.8311355194270497, -0.1741903974514579, 0.5280828095880719],
        [0.8109288739248753, -0.09206380991428609, 0.5778569168392813],
        [0.782912540067989, -0.009050597560441576, 0.6220659460926056],
        [0.747356330466719, 0.07404977699546983, 0.660284140229221],
        [0.7046026708565267, 0.15643701171918867, 0.692143437147402],
        [0.6769711155364927, 0.2030913346609478, 0.7074348157356348],
        [0.6550633023509856, 0.23731767250288277, 0.7173370144017635],
        [0.599215316149778, 0.3159128343693378, 0.7356222440711353],
        [0.537596558889636, 0.3914655829452942, 0.7468230293980784],
        [0.470800452887214, 0.4632483039606319, 0.7508315006969223],
        [0.39947028115778144, 0.5305696905715459, 0.7476090541978054],
        [0.3242929922481304, 0.5927814010233604, 0.737186723822083],
        [0.24599258454654763, 0.6492843025360439, 0.7196648823086985],
        [0.16532313378255648, 0.6995342412804009, 0.6952122745698388],
        [0.08306153086542105, 0.7430472828769131, 0.664064392585184],
    ],
    [
        [0.0, -0.7179909998951836, 0.6960523860094976],
        [-0.09795783392548255, -0.7169066512619225, 0.6902529363566982],
        [-0.1949722803610636, -0.708918099675969, 0.6778059735961464],
        [-0.2901090371540775, -0.6941022792560824, 0.6588313687834283],
        [-0.3824518853295661, -0.6726018744520574, 0.6335118577354645],
        [-0.47111151277986363, -0.6446239459154738, 0.6020912811846995],
        [-0.5552340788263415, -0.6104379363924303, 0.5648722364595515],
        [-0.6340094371718998, -0.5703730758426073, 0.5222131633067232],
        [-0.7066789380526795, -0.5248152107747805, 0.4745248919204978],
        [-0.7725427344500085, -0.4742030883340154, 0.42226668642338544],
        [-0.8309665219997672, -0.41902413092681706, 0.3659418219015646],
        [-0.8813876476901601, -0.3598097420769032, 0.3060927375906832],
        [-0.9233205285177981, -0.2971301887187759, 0.2432958128894923],
        [-0.9563613279174664, -0.23158910921540332, 0.17815581651115553],
        [-0.9801918449290079, -0.1638176999908017, 0.11130008222994059],
        [-0.9945825786465159, -0.09446863676342455, 0.04337246731403742],
        [-0.9987523388778448, -0.04993761694389224, -0.0],
        [-0.994582578646516, 0.046282212420751076, -0.09307766147839955],
        [-0.9801918449290079, 0.11632849075766485, -0.160286086023434],
        [-0.9563613279174664, 0.18525446213696067, -0.22595086793877522],
        [-0.9233205285177981, 0.2523963317754874, -0.28943961947855756],
        [-0.8813876476901602, 0.31710748676514644, -0.3501409092589707],
        [-0.8309665219997672, 0.37876472330867134, -0.40747015067672854],
        [-0.7725427344500087, 0.4367742485128748, -0.4608752317976278],
        [-0.7066789380526796, 0.4905773989388075, -0.5098418324962865],
        [-0.6345202892291061, 0.5393422458447402, -0.5536189523523951],
        [-0.5552340788263415, 0.5835374602467, -0.5926205786156056],
        [-0.47111151277986385, 0.6217991149211259, -0.6256355194596713],
        [-0.3824518853295662, 0.6540725042088895, -0.6526252482441763],
        [-0.29010903715407754, 0.6800468177287201, -0.6733298391268391],
        [-0.19497228036106395, 0.6994719086424178, -0.687549895579179],
        [-0.09795783392548277, 0.7121607027056487, -0.6951484706840865],
        [-0.0, 0.7179909998951836, -0.6960523860094976],
        [0.09795783392548255, 0.7169066512619225, -0.6902529363566982],
        [0.1949722803610636, 0.708918099675969, -0.6778059735961464],
        [0.2901090371540775, 0.6941022792560824, -0.6588313687834283],
        [0.3824518853295661, 0.6726018744520574, -0.6335118577354645],
        [0.47111151277986363, 0.6446239459154738, -0.6020912811846995],
        [0.5552340788263415, 0.6104379363924303, -0.5648722364595515],
        [0.6340094371718998, 0.5703730758426073, -0.5222131633067232],
        [0.7066789380526795, 0.5248152107747805, -0.4745248919204978],
        [0.7725427344500085, 0.4742030883340154, -0.42226668642338544],
        [0.8309665219997672, 0.41902413092681706, -0.3659418219015646],
        [0.8813876476901601, 0.3598097420769032, -0.3060927375906832],
        [0.9233205285177981, 0.2971301887187759, -0.2432958128894923],
        [0.9563613279174664, 0.23158910921540332, -0.17815581651115553],
        [0.9801918449290079, 0.1638176999908017, -0.11130008222994059],
        [0.9945825786465159, 0.09446863676342455, -0.04337246731403742],
        [0.9987523388778448, 0.04993761694389224, 0.0],
        [0.994582578646516, -0.046282212420751076, 0.09307766147839955],
        [0.9801918449290079, -0.11632849075766485, 0.160286086023434],
        [0.9563613279174664, -0.18525446213696067, 0.22595086793877522],
        [0.9233205285177981, -0.2523963317754874, 0.28943961947855756],
        [0.8813876476901602, -0.31710748676514644, 0.3501409092589707],
        [0.8309665219997672, -0.37876472330867134, 0.40747015067672854],
        [0.7725427344500087, -0.4367742485128748, 0.4608752317976278],
        [0.7066789380526796, -0.4905773989388075, 0.5098418324962865],
        [0.6345202892291061, -0.5393422458447402, 0.5536189523523951],
        [0.5552340788263415, -0.5835374602467, 0.5926205786156056],
        [0.47111151277986385, -0.6217991149211259, 0.6256355194596713],
        [0.3824518853295662, -0.6540725042088895, 0.6526252482441763],
        [0.29010903715407754, -0.6800468177287201, 0.6733298391268391],
        [0.19497228036106395, -0.6994719086424178, 0.687549895579179],
        [0.09795783392548277, -0.7121607027056487, 0.6951484706840865],
    ],
    [
        [-0.0, 0.8707803117811984, 0.4916722979935303],
        [-0.0879602396270889, 0.8878509199114583, 0.45164559142885735],
        [-0.17507337406261084, 0.896371038334288, 0.40726929092412995],
        [-0.2605004562010684, 0.8962586136517051, 0.358970764511762],
        [-0.3434187765422748, 0.8875147285748606, 0.3072151534037648],
        [-0.4230297863335797, 0.8702235914969381, 0.2525008924276036],
        [-0.49856678803088783, 0.8445517255202951, 0.19535490982633605],
        [-0.5693023190151288, 0.8107463647479562, 0.13632755265158425],
        [-0.6345551574549497, 0.769133073284049, 0.0759872866205768],
        [-0.7071067811865476, 0.7071067811865476, -0.0],
        [-0.7461579280406502, 0.6641570683762937, -0.04630048539585002],
        [-0.7914330644975089, 0.6018053312454289, -0.10707029328745488],
        [-0.8290862679019352, 0.5336578797944124, -0.1668089557241256],
        [-0.8587549173218094, 0.46037101123390384, -0.22494115673012227],
        [-0.8801532874446845, 0.38265051817081874, -0.2809070514314632],
        [-0.8930753002687384, 0.3012448914396976, -0.3341676576681047],
        [-0.8973965097465848, 0.21693811172680333, -0.384210046686779],
        [-0.8930753002687385, 0.13054209940754496, -0.43055228292528364],
        [-0.8801532874446845, 0.04288889530942158, -0.4727480653153984],
        [-0.8587549173218094, -0.04517735229598652, -0.5103910254061457],
        [-0.8290862679019352, -0.13280851730233167, -0.5431186409141164],
        [-0.7914330644975089, -0.21916066368653478, -0.5706157270112344],
        [-0.7461579280406503, -0.30340217307403067, -0.5926174717269479],
        [-0.6936968828453455, -0.3847217536783252, -0.6089119862322676],
        [-0.6345551574549498, -0.46233625348439394, -0.6193423454450198],
        [-0.5693023190151288, -0.5354982024307031, -0.6238080993041709],
        [-0.5389832233151491, -0.5659323844809067, -0.6238730809872851],
        [-0.49856678803088783, -0.6035030109545101, -0.6222662401588283],
        [-0.42302978633357985, -0.6656957555745204, -0.6147316169554273],
        [-0.34341877654227493, -0.7214774861620317, -0.6012767922342609],
        [-0.2605004562010684, -0.7703109941580899, -0.5820313433125491],
        [-0.17507337406261114, -0.8117259861855822, -0.5571806143840409],
        [-0.0879602396270891, -0.8453236132315463, -0.5269639315531075],
        [0.0, -0.8707803117811984, -0.4916722979935303],
        [0.0879602396270889, -0.8878509199114583, -0.45164559142885735],
        [0.17507337406261084, -0.896371038334288, -0.40726929092412995],
        [0.2605004562010684, -0.8962586136517051, -0.358970764511762],
        [0.3434187765422748, -0.8875147285748606, -0.3072151534037648],
        [0.4230297863335797, -0.8702235914969381, -0.2525008924276036],
        [0.49856678803088783, -0.8445517255202951, -0.19535490982633605],
        [0.5693023190151288, -0.8107463647479562, -0.13632755265158425],
        [0.6345551574549497, -0.769133073284049, -0.0759872866205768],
        [0.7071067811865476, -0.7071067811865476, 0.0],
        [0.7461579280406502, -0.6641570683762937, 0.04630048539585002],
        [0.7914330644975089, -0.6018053312454289, 0.10707029328745488],
        [0.8290862679019352, -0.5336578797944124, 0.1668089557241256],
        [0.8587549173218094, -0.46037101123390384, 0.22494115673012227],
        [0.8801532874446845, -0.38265051817081874, 0.2809070514314632],
        [0.8930753002687384, -0.3012448914396976, 0.3341676576681047],
        [0.8973965097465848, -0.21693811172680333, 0.384210046686779],
        [0.8930753002687385, -0.13054209940754496, 0.43055228292528364],
        [0.8801532874446845, -0.04288889530942158, 0.4727480653153984],
        [0.8587549173218094, 0.04517735229598652, 0.5103910254061457],
        [0.8290862679019352, 0.13280851730233167, 0.5431186409141164],
        [0.7914330644975089, 0.21916066368653478, 0.5706157270112344],
        [0.7461579280406503, 0.30340217307403067, 0.5926174717269479],
        [0.6936968828453455, 0.3847217536783252, 0.6089119862322676],
        [0.6345551574549498, 0.46233625348439394, 0.6193423454450198],
        [0.5693023190151288, 0.5354982024307031, 0.6238080993041709],
        [0.5389832233151491, 0.5659323844809067, 0.6238730809872851],
        [0.49856678803088783, 0.6035030109545101, 0.6222662401588283],
        [0.42302978633357985, 0.6656957555745204, 0.6147316169554273],
        [0.34341877654227493, 0.7214774861620317, 0.6012767922342609],
        [0.2605004562010684, 0.7703109941580899, 0.5820313433125491],
        [0.17507337406261114, 0.8117259861855822, 0.5571806143840409],
        [0.0879602396270891, 0.8453236132315463, 0.5269639315531075],
    ],
    [
        [0.0, -0.9165775543191267, 0.39985695807171895],
        [-0.08905319708946206, -0.9285380539550975, 0.3603978502230917],
        [-0.17724876320952315, -0.9315562245409478, 0.31746791406331076],
        [-0.2637373268458465, -0.9256029994440362, 0.27148058834548516],
        [-0.347685955851156, -0.9107357114764097, 0.22287875615550687],
        [-0.42828617903714183, -0.8870975407484829, 0.17213047970582954],
        [-0.5047617721939592, -0.8549161357663043, 0.11972449264049331],
        [-0.5763762335536962, -0.8145014210519979, 0.06616549326296403],
        [-0.6561787149247867, -0.7546055221635047, -0.0],
        [-0.7023164726502977, -0.7106044685221438, -0.042342195979961084],
        [-0.7554293770387241, -0.6481228151553103, -0.09624589748161083],
        [-0.8012670835665636, -0.5793993847785608, -0.14922269837715324],
        [-0.8393881500625139, -0.5050960215944718, -0.20076240311389912],
        [-0.8694254498171241, -0.4259283076088561, -0.25036865616076504],
        [-0.891089707213699, -0.34265867118487003, -0.297563722183373],
        [-0.9041722836106217, -0.25608904444109004, -0.3418930868964783],
        [-0.9085471866455266, -0.16705314020683035, -0.3829298342849979],
        [-0.9041722836106219, -0.07640842291184326, -0.42027875803861225],
        [-0.891089707213699, 0.014972149264877443, -0.4535801676045753],
        [-0.8694254498171241, 0.10620853145956799, -0.482513352204365],
        [-0.8393881500625139, 0.19642206743681406, -0.5067996694537975],
        [-0.8012670835665637, 0.2847439515294191, -0.5262052288415096],
        [-0.7554293770387244, 0.37032359571191814, -0.5405431442224393],
        [-0.7023164726502978, 0.45233682122824204, -0.5496753336335669],
        [-0.6345202892291061, 0.5393422458447402, -0.5536189523523951],
        [-0.5763762335536962, 0.6025466405606759, -0.5520217236155647],
        [-0.5047617721939592, 0.6692966317035745, -0.5452133271682412],
        [-0.42828617903714206, 0.7296009304084115, -0.5331542283363656],
        [-0.3476859558511561, 0.7828787733129768, -0.5159605628338629],
        [-0.2637373268458465, 0.8286170656654678, -0.4937979150585358],
        [-0.17724876320952349, 0.8663753227074358, -0.46687972342379663],
        [-0.08905319708946227, 0.8957899117828041, -0.4354652248300678],
        [-0.0, 0.9165775543191267, -0.39985695807171895],
        [0.08905319708946206, 0.9285380539550975, -0.3603978502230917],
        [0.17724876320952315, 0.9315562245409478, -0.31746791406331076],
        [0.2637373268458465, 0.9256029994440362, -0.27148058834548516],
        [0.347685955851156, 0.9107357114764097, -0.22287875615550687],
        [0.42828617903714183, 0.8870975407484829, -0.17213047970582954],
        [0.5047617721939592, 0.8549161357663043, -0.11972449264049331],
        [0.5763762335536962, 0.8145014210519979, -0.06616549326296403],
        [0.6561787149247867, 0.7546055221635047, 0.0],
        [0.7023164726502977, 0.7106044685221438, 0.042342195979961084],
        [0.7554293770387241, 0.6481228151553103, 0.09624589748161083],
        [0.8012670835665636, 0.5793993847785608, 0.14922269837715324],
        [0.8393881500625139, 0.5050960215944718, 0.20076240311389912],
        [0.8694254498171241, 0.4259283076088561, 0.25036865616076504],
        [0.891089707213699, 0.34265867118487003, 0.297563722183373],
        [0.9041722836106217, 0.25608904444109004, 0.3418930868964783],
        [0.9085471866455266, 0.16705314020683035, 0.3829298342849979],
        [0.9041722836106219, 0.07640842291184326, 0.42027875803861225],
        [0.891089707213699, -0.014972149264877443, 0.4535801676045753],
        [0.8694254498171241, -0.10620853145956799, 0.482513352204365],
        [0.8393881500625139, -0.19642206743681406, 0.5067996694537975],
        [0.8012670835665637, -0.2847439515294191, 0.5262052288415096],
        [0.7554293770387244, -0.37032359571191814, 0.5405431442224393],
        [0.7023164726502978, -0.45233682122824204, 0.5496753336335669],
        [0.6345202892291061, -0.5393422458447402, 0.5536189523523951],
        [0.5763762335536962, -0.6025466405606759, 0.5520217236155647],
        [0.5047617721939592, -0.6692966317035745, 0.5452133271682412],
        [0.42828617903714206, -0.7296009304084115, 0.5331542283363656],
        [0.3476859558511561, -0.7828787733129768, 0.5159605628338629],
        [0.2637373268458465, -0.8286170656654678, 0.4937979150585358],
        [0.17724876320952349, -0.8663753227074358, 0.46687972342379663],
        [0.08905319708946227, -0.8957899117828041, 0.4354652248300678],
    ],
    [
        [-0.0, 0.6537475158886522, 0.7567127496411148],
        [-0.0979470580583185, 0.6477952491688166, 0.7554916868980301],
        [-0.19495083240422698, 0.6356043600785806, 0.7469948262163515],
        [-0.2900771236631173, 0.617292253544101, 0.7313039970092997],
        [-0.38240981364884596, 0.5930352851617207, 0.7085703105396186],
        [-0.4710596880826676, 0.5630670627971698, 0.6790127046355082],
        [-0.5551730002128339, 0.5276761968141155, 0.6429158351996563],
        [-0.6339396928625176, 0.48720352059859007, 0.600627334817286],
        [-0.7066011997232481, 0.44203880814716423, 0.5525544648643255],
        [-0.7724577507631366, 0.3926170203302885, 0.4991601933577254],
        [-0.830875111394816, 0.33941411598133703, 0.44095873632037247],
        [-0.8812906905012255, 0.2829424681528559, 0.37851060559968897],
        [-0.9232189584956118, 0.22374592968397616, 0.31241721083213586],
        [-0.9562561232368658, 0.16239459560027292, 0.24331506753964943],
        [-0.9800840187685779, 0.09947931278702306, 0.1718696671372106],
        [-0.9944731694311252, 0.035605989810710156, 0.09876906788672334],
        [-0.9987523388778448, -0.04993761694389224, -0.0],
        [-0.9944731694311253, -0.09255093419920934, -0.04957257165475844],
        [-0.9800840187685779, -0.1556003139968991, -0.12338500086517926],
        [-0.9562561232368658, -0.21715117771101478, -0.19600916506816596],
        [-0.9232189584956118, -0.2766107568768648, -0.26674565386203747],
        [-0.8812906905012257, -0.33340642324316966, -0.3349132361912104],
        [-0.8308751113948162, -0.3869912034951521, -0.3998554209736635],
        [-0.7724577507631367, -0.43684904690656556, -0.46094677946893303],
        [-0.7066011997232482, -0.4824997951902882, -0.5175989684987755],
        [-0.6339396928625176, -0.5235038066851103, -0.5692663965135968],
        [-0.5389832233151491, -0.5659323844809067, -0.6238730809872851],
        [-0.47105968808266785, -0.5900406087570631, -0.655709425188516],
        [-0.3824098136488461, -0.6149326135575253, -0.6896525322279083],
        [-0.29007712366311733, -0.6339024811330678, -0.7169539083795228],
        [-0.19495083240422734, -0.6467675212889537, -0.737350626466569],
        [-0.09794705805831874, -0.6534038366557355, -0.7506462549438886],
        [0.0, -0.6537475158886522, -0.7567127496411148],
        [0.0979470580583185, -0.6477952491688166, -0.7554916868980301],
        [0.19495083240422698, -0.6356043600785806, -0.7469948262163515],
        [0.2900771236631173, -0.617292253544101, -0.7313039970092997],
        [0.38240981364884596, -0.5930352851617207, -0.7085703105396186],
        [0.4710596880826676, -0.5630670627971698, -0.6790127046355082],
        [0.5551730002128339, -0.5276761968141155, -0.6429158351996563],
        [0.6339396928625176, -0.48720352059859007, -0.600627334817286],
        [0.7066011997232481, -0.44203880814716423, -0.5525544648643255],
        [0.7724577507631366, -0.3926170203302885, -0.4991601933577254],
        [0.830875111394816, -0.33941411598133703, -0.44095873632037247],
        [0.8812906905012255, -0.2829424681528559, -0.37851060559968897],
        [0.9232189584956118, -0.22374592968397616, -0.31241721083213586],
        [0.9562561232368658, -0.16239459560027292, -0.24331506753964943],
        [0.9800840187685779, -0.09947931278702306, -0.1718696671372106],
        [0.9944731694311252, -0.035605989810710156, -0.09876906788672334],
        [0.9987523388778448, 0.04993761694389224, 0.0],
        [0.9944731694311253, 0.09255093419920934, 0.04957257165475844],
        [0.9800840187685779, 0.1556003139968991, 0.12338500086517926],
        [0.9562561232368658, 0.21715117771101478, 0.19600916506816596],
        [0.9232189584956118, 0.2766107568768648, 0.26674565386203747],
        [0.8812906905012257, 0.33340642324316966, 0.3349132361912104],
        [0.8308751113948162, 0.3869912034951521, 0.3998554209736635],
        [0.7724577507631367, 0.43684904690656556, 0.46094677946893303],
        [0.7066011997232482, 0.4824997951902882, 0.5175989684987755],
        [0.6339396928625176, 0.5235038066851103, 0.5692663965135968],
        [0.5389832233151491, 0.5659323844809067, 0.6238730809872851],
        [0.47105968808266785, 0.5900406087570631, 0.655709425188516],
        [0.3824098136488461, 0.6149326135575253, 0.6896525322279083],
        [0.29007712366311733, 0.6339024811330678, 0.7169539083795228],
        [0.19495083240422734, 0.6467675212889537, 0.737350626466569],
        [0.09794705805831874, 0.6534038366557355, 0.7506462549438886],
    ],
    [
        [0.0, -0.6310117519827829, 0.7757732715553036],
        [-0.07314075609103464, -0.6785938138798185, 0.7308630963200112],
        [-0.14557712671810827, -0.7196406463920789, 0.6789143099367481],
        [-0.216611510034334, -0.7537569460839897, 0.6204272076164803],
        [-0.2855598060970328, -0.7806141543396513, 0.5559650521268547],
        [-0.3517580051241483, -0.7999536215619183, 0.4861486492638347],
        [-0.4145685822714326, -0.811589098109412, 0.4116503691525194],
        [-0.4733866373452034, -0.8154085279823818, 0.3331876709552833],
        [-0.5276457203218807, -0.8113751279832381, 0.2515161933478396],
        [-0.5768232865713672, -0.7995277419588531, 0.1674224773057189],
        [-0.6204457292474879, -0.779980466713082, 0.08171639128470852],
        [-0.6561787149247867, -0.7546055221635047, -0.0],
        [-0.6894023567480878, -0.7186115935252276, -0.09122372586841371],
        [-0.7140724515542091, -0.6773810113795816, -0.1767922491336564],
        [-0.7318656383001545, -0.629626879800223, -0.2606581663952676],
        [-0.7426105588708152, -0.5758090971793246, -0.3420138030242445],
        [-0.7462037338073247, -0.5164459581833181, -0.42007565976633526],
        [-0.7426105588708153, -0.4521091622919278, -0.49409195826816177],
        [-0.7318656383001545, -0.38341830801965826, -0.5633498811137266],
        [-0.7140724515542092, -0.3110349258433919, -0.6271824366457956],
        [-0.6894023567480878, -0.23565610730226738, -0.6849748824601707],
        [-0.6769711155364927, -0.2030913346609478, -0.7074348157356348],
        [-0.6580929403808192, -0.15800779162508993, -0.7361706457110946],
        [-0.6204457292474881, -0.0788377745387181, -0.7802766832120098],
        [-0.5768232865713673, 0.0010914934135734522, -0.8168682297109703],
        [-0.5276457203218807, 0.08101024968762122, -0.8455928886122168],
        [-0.4733866373452034, 0.16014883297247007, -0.8661740257480346],
        [-0.4145685822714326, 0.2377450954495367, -0.8784134335170115],
        [-0.35175800512414845, 0.31305174269273456, -0.8821932397315917],
        [-0.2855598060970329, 0.3853435305223117, -0.8774770427916764],
        [-0.21661151003433401, 0.45392424950275756, -0.8643102622519323],
        [-0.1455771267181085, 0.5181334298202558, -0.8428197014066519],
        [-0.0731407560910348, 0.5773527019680411, -0.8132123261047105],
        [-0.0, 0.6310117519827829, -0.7757732715553036],
        [0.07314075609103464, 0.6785938138798185, -0.7308630963200112],
        [0.14557712671810827, 0.7196406463920789, -0.6789143099367481],
        [0.216611510034334, 0.7537569460839897, -0.6204272076164803],
        [0.2855598060970328, 0.7806141543396513, -0.5559650521268547],
        [0.3517580051241483, 0.7999536215619183, -0.4861486492638347],
        [0.4145685822714326, 0.811589098109412, -0.4116503691525194],
        [0.4733866373452034, 0.8154085279823818, -0.3331876709552833],
        [0.5276457203218807, 0.8113751279832381, -0.2515161933478396],
        [0.5768232865713672, 0.7995277419588531, -0.1674224773057189],
        [0.6204457292474879, 0.779980466713082, -0.08171639128470852],
        [0.6561787149247867, 0.7546055221635047, 0.0],
        [0.6894023567480878, 0.7186115935252276, 0.09122372586841371],
        [0.7140724515542091, 0.6773810113795816, 0.1767922491336564],
        [0.7318656383001545, 0.629626879800223, 0.2606581663952676],
        [0.7426105588708152, 0.5758090971793246, 0.3420138030242445],
        [0.7462037338073247, 0.5164459581833181, 0.42007565976633526],
        [0.7426105588708153, 0.4521091622919278, 0.49409195826816177],
        [0.7318656383001545, 0.38341830801965826, 0.5633498811137266],
        [0.7140724515542092, 0.3110349258433919, 0.6271824366457956],
        [0.6894023567480878, 0.23565610730226738, 0.6849748824601707],
        [0.6769711155364927, 0.2030913346609478, 0.7074348157356348],
        [0.6580929403808192, 0.15800779162508993, 0.7361706457110946],
        [0.6204457292474881, 0.0788377745387181, 0.7802766832120098],
        [0.5768232865713673, -0.0010914934135734522, 0.8168682297109703],
        [0.5276457203218807, -0.08101024968762122, 0.8455928886122168],
        [0.4733866373452034, -0.16014883297247007, 0.8661740257480346],
        [0.4145685822714326, -0.2377450954495367, 0.8784134335170115],
        [0.35175800512414845, -0.31305174269273456, 0.8821932397315917],
        [0.2855598060970329, -0.3853435305223117, 0.8774770427916764],
        [0.21661151003433401, -0.45392424950275756, 0.8643102622519323],
        [0.1455771267181085, -0.5181334298202558, 0.8428197014066519],
        [0.0731407560910348, -0.5773527019680411, 0.8132123261047105],
    ],
]
