public class Busy {
    void go(android.os.Vibrator v, int n) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(VibrationEffect.createWaveform(buildPattern(), 1));
        } else {
            v.vibrate(getPat(), n + 1);
        }
    }

    static long[] getPat() {
        return new long[]{0, 100};
    }

    static long[] buildPattern() {
        return new long[]{0, 200, 100, 200};
    }
}
